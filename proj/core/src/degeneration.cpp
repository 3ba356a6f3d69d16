#include "fanorat/degeneration.hpp"

namespace fanorat {

std::string TorusWeight::to_string() const {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += std::to_string(w[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

TorusWeight monomial_weight(int mask) {
  std::array<int, 4> raw{};
  for (int i = 0; i < 4; ++i) raw[static_cast<std::size_t>(i)] = ((mask >> i) & 1) ? 0 : 1;
  return TorusWeight::canonical(raw);
}

std::map<TorusWeight, std::vector<int>> weight_decomposition() {
  std::map<TorusWeight, std::vector<int>> out;
  for (int s = 0; s < 16; ++s) out[monomial_weight(s)].push_back(s);
  return out;
}

namespace {

struct P1Point {
  FqElem u, v;
};

P1Point normalize_p1(const FqField& k, P1Point x) {
  if (!k.is_zero(x.u)) return {k.one(), k.div(x.v, x.u)};
  return {k.zero(), k.one()};
}

constexpr std::size_t kCollectCap = 64;

// Counts the projective points of (P^1)^4 over k where all eight partials of
// the form vanish. The first two coordinates are exhausted; for each prefix
// the last-two-factor partials are linear in the remaining coordinates, and
// a 2x2 determinant decides whether candidates exist at all.
std::uint64_t count_singular_points(const FqField& k, const std::array<FqElem, 16>& c,
                                    std::vector<std::array<FqElem, 8>>* collect) {
  const std::uint64_t q = k.q();
  QuadrilinearForm<FqField> form;
  form.coeff = c;
  auto p1 = [&](std::uint64_t j) -> P1Point {
    if (j < q) return {k.one(), FqElem{static_cast<std::uint32_t>(j)}};
    return {k.zero(), k.one()};
  };
  std::uint64_t count = 0;
  auto verify = [&](const P1Point& x1, const P1Point& x2, P1Point x3, P1Point x4) {
    if (k.is_zero(x3.u) && k.is_zero(x3.v)) return;
    if (k.is_zero(x4.u) && k.is_zero(x4.v)) return;
    std::array<FqElem, 8> pt{x1.u, x2.u, x3.u, x4.u, x1.v, x2.v, x3.v, x4.v};
    if (!is_singular_point(k, form, pt)) return;
    ++count;
    if (collect && collect->size() < kCollectCap) {
      x3 = normalize_p1(k, x3);
      x4 = normalize_p1(k, x4);
      collect->push_back({x1.u, x2.u, x3.u, x4.u, x1.v, x2.v, x3.v, x4.v});
    }
  };

  for (std::uint64_t j1 = 0; j1 <= q; ++j1) {
    P1Point x1 = p1(j1);
    for (std::uint64_t j2 = 0; j2 <= q; ++j2) {
      P1Point x2 = p1(j2);
      // A[m] carries the factor-1,2 part of the masks with low bits m.
      FqElem a[4];
      a[0] = k.mul(x1.v, x2.v);
      a[1] = k.mul(x1.u, x2.v);
      a[2] = k.mul(x1.v, x2.u);
      a[3] = k.mul(x1.u, x2.u);
      // T[n] is the coefficient sum for the factor-3,4 mask bits n: the
      // last-factor partials are T3*u4 + T1*v4, T2*u4 + T0*v4 (factor 3
      // free), and T3*u3 + T2*v3, T1*u3 + T0*v3 (factor 4 free).
      FqElem t[4];
      for (int n = 0; n < 4; ++n) {
        FqElem acc = k.zero();
        for (int m = 0; m < 4; ++m)
          acc = k.add(acc, k.mul(c[static_cast<std::size_t>(m | (n << 2))],
                                 a[static_cast<std::size_t>(m)]));
        t[static_cast<std::size_t>(n)] = acc;
      }
      FqElem det = k.sub(k.mul(t[3], t[0]), k.mul(t[1], t[2]));
      if (!k.is_zero(det)) continue;
      bool any_t = !(k.is_zero(t[0]) && k.is_zero(t[1]) && k.is_zero(t[2]) && k.is_zero(t[3]));
      if (any_t) {
        P1Point x4 = (!k.is_zero(t[3]) || !k.is_zero(t[1])) ? P1Point{t[1], k.neg(t[3])}
                                                            : P1Point{t[0], k.neg(t[2])};
        P1Point x3 = (!k.is_zero(t[3]) || !k.is_zero(t[2])) ? P1Point{t[2], k.neg(t[3])}
                                                            : P1Point{t[0], k.neg(t[1])};
        verify(x1, x2, x3, x4);
        continue;
      }
      // All four sums vanish: the last-two-factor partials hold identically
      // and the about-face conditions are the factor-1,2 partials, bilinear
      // in (x3, x4). Candidates come from the first nonzero one.
      FqElem cm[4][2][2];
      bool nz[4] = {false, false, false, false};
      for (int g = 0; g < 2; ++g)       // factor index 0 or 1
        for (int s01 = 0; s01 < 2; ++s01) {  // 1 = partial wrt u, 0 = wrt v
          int idx = 2 * g + (1 - s01);
          const P1Point& other = g == 0 ? x2 : x1;
          for (int aa = 0; aa < 2; ++aa)
            for (int bb = 0; bb < 2; ++bb) {
              FqElem acc = k.zero();
              for (int ob = 0; ob < 2; ++ob) {
                int mask = (g == 0 ? (s01 | (ob << 1)) : (ob | (s01 << 1))) |
                           (aa << 2) | (bb << 3);
                acc = k.add(acc, k.mul(c[static_cast<std::size_t>(mask)],
                                       ob ? other.u : other.v));
              }
              cm[idx][aa][bb] = acc;
              if (!k.is_zero(acc)) nz[idx] = true;
            }
        }
      int pick = -1;
      for (int i = 0; i < 4 && pick < 0; ++i)
        if (nz[i]) pick = i;
      if (pick < 0) {
        // Every partial vanishes identically over this prefix: the whole
        // (x3, x4) plane is singular.
        count += (q + 1) * (q + 1);
        continue;
      }
      const auto& m = cm[pick];
      FqElem det2 = k.sub(k.mul(m[0][0], m[1][1]), k.mul(m[0][1], m[1][0]));
      if (!k.is_zero(det2)) {
        for (std::uint64_t j3 = 0; j3 <= q; ++j3) {
          P1Point x3 = p1(j3);
          // Index 1 marks the u-slot, so the u4 coefficient pairs m[.][1]
          // with the x3 coordinates.
          FqElem r1 = k.add(k.mul(x3.u, m[1][1]), k.mul(x3.v, m[0][1]));
          FqElem r0 = k.add(k.mul(x3.u, m[1][0]), k.mul(x3.v, m[0][0]));
          if (k.is_zero(r0) && k.is_zero(r1)) continue;
          verify(x1, x2, x3, {r0, k.neg(r1)});
        }
      } else {
        // Rank one: the zero set is a cross of two lines.
        int i0 = (!k.is_zero(m[0][0]) || !k.is_zero(m[0][1])) ? 0 : 1;
        int j0 = (!k.is_zero(m[0][0]) || !k.is_zero(m[1][0])) ? 0 : 1;
        FqElem col0 = m[0][j0], col1 = m[1][j0];
        FqElem row0 = m[i0][0], row1 = m[i0][1];
        P1Point x3l{col0, k.neg(col1)};
        P1Point x4r{row0, k.neg(row1)};
        for (std::uint64_t j4 = 0; j4 <= q; ++j4) verify(x1, x2, x3l, p1(j4));
        for (std::uint64_t j3 = 0; j3 <= q; ++j3) {
          P1Point x3 = p1(j3);
          // Skip the crossing point already covered by the first line.
          if (k.is_zero(k.sub(k.mul(x3.u, x3l.v), k.mul(x3.v, x3l.u)))) continue;
          verify(x1, x2, x3, x4r);
        }
      }
    }
  }
  return count;
}

}  // namespace

PencilProbeReport pencil_smoothness_probe(const FqField& f,
                                          const QuadrilinearForm<FqField>& second,
                                          const std::vector<FqElem>& ts,
                                          std::uint32_t max_degree, std::uint64_t bound) {
  if (f.d() != 1) throw MathError("probe needs a prime base field");
  auto y0 = standard_marked_point(f);
  if (!f.is_zero(quadrilinear_eval(f, second, y0)))
    throw MathError("pencil direction must vanish at the marked point");
  QuadrilinearForm<FqField> base = invariant_divisor_through(f, y0);
  PencilProbeReport rep;
  rep.p = f.p();
  rep.max_degree = max_degree;
  for (FqElem tval : ts) {
    QuadrilinearForm<FqField> member =
        quadrilinear_add(f, base, quadrilinear_scale(f, tval, second));
    PencilProbeRow row;
    row.t = tval;
    for (std::uint32_t d = 1; d <= max_degree; ++d) {
      std::uint64_t qd = 1;
      for (std::uint32_t i = 0; i < d; ++i) {
        qd *= f.p();
        if (qd > bound) throw ResourceError("probe extension exceeds the table bound");
      }
      const FqField& k = FqField::get(f.p(), d, bound);
      std::array<FqElem, 16> c;
      for (int s = 0; s < 16; ++s)
        c[static_cast<std::size_t>(s)] =
            k.from_int(static_cast<long long>(member.coeff[static_cast<std::size_t>(s)].v));
      auto* collect = d == 1 ? &row.base_field_points : nullptr;
      row.count_per_degree.push_back(count_singular_points(k, c, collect));
    }
    row.smooth_member = true;
    for (auto n : row.count_per_degree)
      if (n) row.smooth_member = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace fanorat
