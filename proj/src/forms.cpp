#include <sstream>

#include "secmin/errors.hpp"
#include "secmin/lattice.hpp"

namespace secmin {

HomogeneousForm HomogeneousForm::make(std::size_t num_vars,
                                      const std::vector<std::pair<Exponent, BigInt>>& terms) {
  require(num_vars >= 1, "num_vars >= 1", "form: needs at least one variable");
  HomogeneousForm f;
  f.num_vars_ = num_vars;
  bool have_degree = false;
  for (const auto& [alpha, coeff] : terms) {
    require(alpha.size() == num_vars, "exponent arity",
            "form: exponent has " + std::to_string(alpha.size()) + " entries, expected " + std::to_string(num_vars));
    std::uint32_t deg = 0;
    for (auto e : alpha) deg += e;
    if (!have_degree) {
      f.degree_ = deg;
      have_degree = true;
    }
    require(deg == f.degree_, "homogeneous",
            "form: term of degree " + std::to_string(deg) + " in a form of degree " + std::to_string(f.degree_));
    f.terms_[alpha] += coeff;
  }
  for (auto it = f.terms_.begin(); it != f.terms_.end();)
    it = it->second == 0 ? f.terms_.erase(it) : std::next(it);
  require(!f.terms_.empty(), "nonzero form", "form: all coefficients vanish");
  require(f.degree_ >= 1, "degree >= 1", "form: degree must be positive");
  return f;
}

BigInt evaluate_form(const HomogeneousForm& f, const IntVec& v) {
  require(v.size() == f.num_vars(), "vector arity", "evaluate_form: vector has wrong length");
  BigInt total = 0;
  BigInt mono;
  for (const auto& [alpha, coeff] : f.terms()) {
    mono = coeff;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), BigInt(static_cast<long>(v[i])).get_mpz_t(), alpha[i]);
      mono *= pw;
    }
    total += mono;
  }
  return total;
}

HomogeneousForm parse_form(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<HomogeneousForm::Exponent, BigInt>> terms;
  std::size_t arity = 0;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line.substr(0, line.find('#')));
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    const std::string where = "form line " + std::to_string(lineno);
    if (toks.size() < 2) throw ParseError(where + ": need a coefficient and at least one exponent");
    if (arity == 0) arity = toks.size() - 1;
    if (toks.size() - 1 != arity)
      throw ParseError(where + ": " + std::to_string(toks.size() - 1) + " exponents, expected " + std::to_string(arity));
    BigInt c;
    if (c.set_str(toks[0], 10) != 0) throw ParseError(where + ": bad coefficient '" + toks[0] + "'");
    HomogeneousForm::Exponent alpha;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      const auto& e = toks[k];
      if (e.empty() || e.size() > 6 || e.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(where + ": bad exponent '" + e + "'");
      alpha.push_back(static_cast<std::uint32_t>(std::stoul(e)));
    }
    terms.emplace_back(std::move(alpha), std::move(c));
  }
  if (terms.empty()) throw ParseError("form: no terms");
  return HomogeneousForm::make(arity, terms);
}

}  // namespace secmin
