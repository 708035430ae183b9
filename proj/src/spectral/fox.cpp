#include "tbundle/spectral/fox.hpp"

#include <stdexcept>

namespace tbundle::spectral {

Word surface_relator(int genus) {
  Word r;
  r.reserve(4 * static_cast<std::size_t>(genus));
  for (std::size_t i = 0; i < static_cast<std::size_t>(genus); ++i) {
    const std::size_t a = 2 * i;
    const std::size_t b = 2 * i + 1;
    r.insert(r.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  return r;
}

GroupRingElement fox_derivative(const Word& word, std::size_t gen) {
  GroupRingElement out;
  Word prefix;
  for (const Letter& x : word) {
    if (x.gen == gen) {
      if (x.exp == 1) {
        out.push_back({1, prefix});
      } else {
        Word w = prefix;
        w.push_back(x);
        out.push_back({-1, std::move(w)});
      }
    }
    prefix.push_back(x);
  }
  return out;
}

SL2Z evaluate(const Word& word, const std::vector<SL2Z>& images) {
  SL2Z acc;
  for (const Letter& x : word) {
    if (x.gen >= images.size()) throw std::out_of_range("evaluate: generator index out of range");
    acc = acc * (x.exp == 1 ? images[x.gen] : images[x.gen].inverse());
  }
  return acc;
}

la::IntMatrix evaluate(const GroupRingElement& element, const std::vector<SL2Z>& images) {
  la::IntMatrix acc(2, 2);
  for (const auto& term : element) {
    la::IntMatrix m = evaluate(term.word, images).matrix();
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) acc(r, c) += term.coeff * m(r, c);
  }
  return acc;
}

}  // namespace tbundle::spectral
