#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fanorat/degeneration.hpp"
#include "fanorat/determinantal.hpp"

namespace fanorat {

// On-disk description of a net of bilinear forms with a marked base point.
// Entries are exact-value strings in the named field; "expect" carries
// free-form key/value expectations interpreted by each consumer. The same
// shape serves the 4x4 nets (3 forms, 2 base vectors) and the pair-form
// triples (3 forms, 3 base vectors).
struct NetFixture {
  std::string field;
  std::vector<std::vector<std::vector<std::string>>> forms;
  std::vector<std::vector<std::string>> base;
  std::map<std::string, std::string> expect;
};

// On-disk description of a multilinear form on four pairs of coordinates,
// sixteen coefficient strings in mask order.
struct QuadrilinearFixture {
  std::string field;
  std::array<std::string, 16> coeff;
  std::map<std::string, std::string> expect;
};

// Parsing rejects structural problems with std::invalid_argument; the
// element strings are kept verbatim and only read by the materializers.
NetFixture parse_net_fixture(const std::string& json_text);
QuadrilinearFixture parse_quadrilinear_fixture(const std::string& json_text);
std::string render_net_fixture(const NetFixture& fx);
std::string render_quadrilinear_fixture(const QuadrilinearFixture& fx);
NetFixture load_net_fixture(const std::string& path);
QuadrilinearFixture load_quadrilinear_fixture(const std::string& path);

namespace detail {

// Element strings are user input, so parse failures surface as
// std::invalid_argument rather than as computation errors.
template <class F>
typename F::Elem parse_elem(const F& f, const std::string& s) {
  try {
    return f.parse(s);
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad element string \"" + s + "\": " + e.what());
  }
}

template <class F>
Mat<F> mat_from_strings(const F& f, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix fixture has no rows");
  Mat<F> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      throw std::invalid_argument("matrix fixture rows have uneven lengths");
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = parse_elem(f, rows[r][c]);
  }
  return m;
}

template <class F>
std::vector<typename F::Elem> vec_from_strings(const F& f, const std::vector<std::string>& v) {
  std::vector<typename F::Elem> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_elem(f, s));
  return out;
}

}  // namespace detail

template <class F>
Net33<F> net33_from_fixture(const F& f, const NetFixture& fx) {
  if (fx.forms.size() != 3) throw std::invalid_argument("net fixture needs three forms");
  return Net33<F>(f, {detail::mat_from_strings(f, fx.forms[0]),
                      detail::mat_from_strings(f, fx.forms[1]),
                      detail::mat_from_strings(f, fx.forms[2])});
}

template <class F>
BasePoint33<F> base33_from_fixture(const F& f, const Net33<F>& net, const NetFixture& fx) {
  if (fx.base.size() != 2) throw std::invalid_argument("net fixture needs two base vectors");
  return BasePoint33<F>(f, net, detail::vec_from_strings(f, fx.base[0]),
                        detail::vec_from_strings(f, fx.base[1]));
}

template <class F>
Net222<F> net222_from_fixture(const F& f, const NetFixture& fx) {
  if (fx.forms.size() != 3) throw std::invalid_argument("pair-form fixture needs three forms");
  if (fx.base.size() != 3) throw std::invalid_argument("pair-form fixture needs three base vectors");
  return Net222<F>(f,
                   {detail::mat_from_strings(f, fx.forms[0]),
                    detail::mat_from_strings(f, fx.forms[1]),
                    detail::mat_from_strings(f, fx.forms[2])},
                   {detail::vec_from_strings(f, fx.base[0]),
                    detail::vec_from_strings(f, fx.base[1]),
                    detail::vec_from_strings(f, fx.base[2])});
}

template <class F>
QuadrilinearForm<F> quadrilinear_from_fixture(const F& f, const QuadrilinearFixture& fx) {
  QuadrilinearForm<F> q;
  for (std::size_t m = 0; m < 16; ++m) q.coeff[m] = detail::parse_elem(f, fx.coeff[m]);
  return q;
}

}  // namespace fanorat
