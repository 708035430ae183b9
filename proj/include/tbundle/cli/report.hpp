#pragma once

#include "tbundle/bundle/torus_bundle.hpp"
#include "tbundle/classify/classify.hpp"
#include "tbundle/spectral/spectral.hpp"
#include "tbundle/swcalc/parity_sweep.hpp"
#include "tbundle/swcalc/sw_polynomial.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace tbundle::cli {

using Json = nlohmann::ordered_json;

/// int64-sized values as JSON numbers, anything larger as a decimal string.
Json to_json(const BigInt& v);

struct Sw0Result {
  int genus;
  long m;
  long n;
  BigInt coset;
  std::optional<BigInt> closed;
  std::optional<BigInt> nonpullback;
  bool agree;
};

std::string classify_text(const TorusBundle& b, const classify::ClassificationReport& r);
Json classify_json(const TorusBundle& b, const classify::ClassificationReport& r);

std::string homology_text(const TorusBundle& b);
Json homology_json(const TorusBundle& b);

std::string spectral_text(const TorusBundle& b, const spectral::E2Ranks& r, bool nonzero);
Json spectral_json(const TorusBundle& b, const spectral::E2Ranks& r, bool nonzero);

std::string swpoly_text(int genus, long n, const sw::SWPolynomial& p);
Json swpoly_json(int genus, long n, const sw::SWPolynomial& p);

std::string sw0_text(const Sw0Result& r);
Json sw0_json(const Sw0Result& r);

std::string sweep_text(sw::IntRange g, sw::IntRange mn, const sw::SweepReport& r);
Json sweep_json(sw::IntRange g, sw::IntRange mn, const sw::SweepReport& r);

}  // namespace tbundle::cli
