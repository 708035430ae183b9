#include "tbundle/cli/report.hpp"

#include "tbundle/bundle/lattice.hpp"
#include "tbundle/homology/homology.hpp"

#include <sstream>

namespace tbundle::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string vec_text(const Vec2& v) { return "(" + v[0].get_str() + ", " + v[1].get_str() + ")"; }

Json vec_json(const Vec2& v) { return Json::array({to_json(v[0]), to_json(v[1])}); }

Json group_json(const la::AbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(to_json(d));
  return {{"free_rank", g.free_rank()}, {"invariant_factors", factors}, {"text", g.to_string()}};
}

Json lattice_json(const Lattice& l) {
  Json basis = Json::array();
  for (const auto& v : l.basis) basis.push_back(vec_json(v));
  return {{"rank", l.rank}, {"basis", basis}};
}

std::string lattice_text(const Lattice& l) {
  std::string out = "rank " + std::to_string(l.rank);
  if (l.rank == 1) out += ", generator " + vec_text(l.basis.front());
  return out;
}

Json e2_json(const spectral::E2Ranks& r) {
  return {{"e00", r.e00}, {"e10", r.e10}, {"e20", r.e20}, {"e01", r.e01}, {"e11", r.e11},
          {"e21", r.e21}, {"e02", r.e02}, {"e12", r.e12}, {"e22", r.e22}};
}

constexpr const char* kSignNote =
    "Seiberg-Witten values are defined up to a global sign; the sign(n) representative is shown";

}  // namespace

Json to_json(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

std::string classify_text(const TorusBundle& b, const classify::ClassificationReport& r) {
  std::ostringstream os;
  os << "genus: " << b.genus() << '\n'
     << "euler: " << vec_text(b.euler()) << '\n'
     << "H1: " << r.h1.to_string() << '\n'
     << "b1: " << r.betti.b1 << '\n'
     << "b2: " << r.betti.b2 << '\n'
     << "fixed lattice: rank " << r.fixed_rank << '\n'
     << "circle action: " << yes_no(r.has_circle_action) << '\n'
     << "fiber class nonzero: " << yes_no(r.fiber_class_nonzero) << '\n'
     << "symplectic: " << yes_no(r.symplectic) << " (" << r.rationale.front().rule << ")\n"
     << "rationale:\n";
  for (const auto& e : r.rationale) os << "  - " << e.rule << ": " << e.citation << '\n';
  os << "cross-checks: flat-twin b1 " << (r.cross_checks.flat_twin_b1 ? "agrees" : "DISAGREES")
     << ", spectral " << (r.cross_checks.spectral ? "agrees" : "DISAGREES") << '\n';
  return os.str();
}

Json classify_json(const TorusBundle& b, const classify::ClassificationReport& r) {
  Json rationale = Json::array();
  for (const auto& e : r.rationale) rationale.push_back({{"rule", e.rule}, {"citation", e.citation}});
  return {{"genus", b.genus()},
          {"euler", vec_json(b.euler())},
          {"h1", group_json(r.h1)},
          {"b1", r.betti.b1},
          {"b2", r.betti.b2},
          {"fixed_rank", r.fixed_rank},
          {"has_circle_action", r.has_circle_action},
          {"fiber_class_nonzero", r.fiber_class_nonzero},
          {"symplectic", r.symplectic},
          {"rationale", rationale},
          {"cross_checks",
           {{"flat_twin_b1", r.cross_checks.flat_twin_b1}, {"spectral", r.cross_checks.spectral}}}};
}

std::string homology_text(const TorusBundle& b) {
  const auto h1 = homology::h1_total_space(b);
  const auto betti = homology::betti(b);
  std::ostringstream os;
  os << "H1: " << h1.to_string() << '\n'
     << "invariant factors:";
  if (h1.invariant_factors().empty()) os << " none";
  for (const auto& d : h1.invariant_factors()) os << ' ' << d.get_str();
  os << '\n'
     << "b1: " << betti.b1 << '\n'
     << "b2: " << betti.b2 << '\n'
     << "fixed lattice: " << lattice_text(fixed_sublattice(b)) << '\n'
     << "S lattice: " << lattice_text(s_sublattice(b)) << '\n'
     << "circle action: " << yes_no(homology::has_fiber_circle_action(b)) << '\n';
  if (b.is_flat()) os << "trichotomy: " << homology::to_string(homology::trichotomy(b)) << '\n';
  return os.str();
}

Json homology_json(const TorusBundle& b) {
  const auto betti = homology::betti(b);
  Json j = {{"h1", group_json(homology::h1_total_space(b))},
            {"b1", betti.b1},
            {"b2", betti.b2},
            {"fixed_lattice", lattice_json(fixed_sublattice(b))},
            {"s_lattice", lattice_json(s_sublattice(b))},
            {"has_circle_action", homology::has_fiber_circle_action(b)}};
  if (b.is_flat()) j["trichotomy"] = std::string(homology::to_string(homology::trichotomy(b)));
  return j;
}

std::string spectral_text(const TorusBundle& b, const spectral::E2Ranks& r, bool nonzero) {
  std::ostringstream os;
  os << "E2 ranks (rows q = 2, 1, 0; columns p = 0, 1, 2):\n"
     << "  q=2: " << r.e02 << ' ' << r.e12 << ' ' << r.e22 << '\n'
     << "  q=1: " << r.e01 << ' ' << r.e11 << ' ' << r.e21 << '\n'
     << "  q=0: " << r.e00 << ' ' << r.e10 << ' ' << r.e20 << '\n'
     << "b2: " << homology::betti(b).b2 << '\n'
     << "2 + rank E11: " << 2 + r.e11 << '\n'
     << "fiber class nonzero: " << yes_no(nonzero) << '\n';
  return os.str();
}

Json spectral_json(const TorusBundle& b, const spectral::E2Ranks& r, bool nonzero) {
  return {{"e2", e2_json(r)}, {"b2", homology::betti(b).b2}, {"fiber_class_nonzero", nonzero}};
}

std::string swpoly_text(int genus, long n, const sw::SWPolynomial& p) {
  std::ostringstream os;
  os << "SW3(g=" << genus << ", n=" << n << ") = " << p.to_string() << '\n'
     << "note: " << kSignNote << '\n';
  return os.str();
}

Json swpoly_json(int genus, long n, const sw::SWPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(to_json(c));
  return {{"genus", genus}, {"n", n},           {"modulus", p.modulus},
          {"coefficients", coeffs}, {"text", p.to_string()}, {"sign_convention", "sign(n)"}};
}

std::string sw0_text(const Sw0Result& r) {
  std::ostringstream os;
  os << "sw4(0) for g=" << r.genus << ", m=" << r.m << ", n=" << r.n << '\n'
     << "coset: " << r.coset.get_str() << '\n'
     << "closed: " << (r.closed ? r.closed->get_str() : "n/a (n even, m odd)") << '\n'
     << "non-pullback: " << (r.nonpullback ? r.nonpullback->get_str() : "n/a") << '\n'
     << "routes agree: " << yes_no(r.agree) << '\n'
     << "even: " << yes_no(mpz_even_p(r.coset.get_mpz_t()) != 0) << '\n'
     << "note: " << kSignNote << '\n';
  return os.str();
}

Json sw0_json(const Sw0Result& r) {
  return {{"genus", r.genus},
          {"m", r.m},
          {"n", r.n},
          {"coset", to_json(r.coset)},
          {"closed", r.closed ? to_json(*r.closed) : Json(nullptr)},
          {"nonpullback", r.nonpullback ? to_json(*r.nonpullback) : Json(nullptr)},
          {"agree", r.agree},
          {"even", mpz_even_p(r.coset.get_mpz_t()) != 0},
          {"sign_convention", "sign(n)"}};
}

std::string sweep_text(sw::IntRange g, sw::IntRange mn, const sw::SweepReport& r) {
  std::ostringstream os;
  os << "grid: g " << g.lo << ".." << g.hi << ", m,n " << mn.lo << ".." << mn.hi << '\n'
     << "cases: " << r.cases << '\n'
     << "skipped (m or n zero): " << r.skipped << '\n'
     << "closed-form checks: " << r.closed_checked << '\n'
     << "all even: " << yes_no(r.all_even) << '\n'
     << "counterexamples: " << r.counterexamples.size() << '\n';
  for (const auto& c : r.counterexamples)
    os << "  g=" << c.cell.genus << " m=" << c.cell.m << " n=" << c.cell.n
       << " coset=" << c.cell.coset.get_str()
       << " closed=" << (c.cell.closed ? c.cell.closed->get_str() : "n/a") << ": " << c.reason
       << '\n';
  return os.str();
}

Json sweep_json(sw::IntRange g, sw::IntRange mn, const sw::SweepReport& r) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back({{"genus", c.cell.genus},
                   {"m", c.cell.m},
                   {"n", c.cell.n},
                   {"coset", to_json(c.cell.coset)},
                   {"closed", c.cell.closed ? to_json(*c.cell.closed) : Json(nullptr)},
                   {"reason", c.reason}});
  return {{"genus_range", {g.lo, g.hi}},
          {"mn_range", {mn.lo, mn.hi}},
          {"cases", r.cases},
          {"skipped", r.skipped},
          {"closed_checked", r.closed_checked},
          {"all_even", r.all_even},
          {"counterexamples", ces}};
}

}  // namespace tbundle::cli
