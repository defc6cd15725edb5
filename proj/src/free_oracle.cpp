#include "lca/free_oracle.hpp"

#include <map>

namespace lca {

namespace {

std::size_t order_index(const Letter& l) { return l.j * (l.j - 1) / 2 + l.i; }

bool is_diagonal_bracket(const Letter& l) { return !l.generator && l.i == l.j; }

} // namespace

PBWElement free_oracle_multiply(const std::shared_ptr<const EnvelopingAlgebra>& U, const Word& u, const Word& v,
                                std::size_t step_bound) {
  const GenericColorAlgebra& X = U->lie();
  const ColorAlgebra& A = X.algebra();
  const Bicharacter& eps = X.eps();

  auto basis_index = [&](const Letter& l) { return l.generator ? X.generator(l.i) : X.positive(l.i, l.j); };
  auto letter_of = [&](std::size_t idx) {
    if (X.is_generator(idx))
      return Letter::x(idx + 1);
    auto [i, j] = X.positive_pair(idx);
    return Letter::bracket(i, j);
  };
  auto degree = [&](const Letter& l) { return A.degree(basis_index(l)); };

  std::map<Word, Scalar> pending;
  auto push = [&](Word w, const Scalar& c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        pending.erase(it);
    }
  };

  Word start = u;
  start.insert(start.end(), v.begin(), v.end());
  for (const auto& l : start)
    basis_index(l); // validates indices
  push(std::move(start), Scalar(1));

  PBWElement result = U->zero();
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();

    std::size_t k = 0;
    bool rewritten = false;
    for (; k < w.size() && !rewritten; ++k) {
      if (is_diagonal_bracket(w[k])) {
        // x x - eps(x,x) x x = <x,x>
        const GroupElement g = degree(Letter::x(w[k].i));
        const Scalar factor = Scalar(1) - eps(g, g);
        Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        out.push_back(Letter::x(w[k].i));
        out.push_back(Letter::x(w[k].i));
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
        push(std::move(out), c * factor);
        rewritten = true;
      } else if (k + 1 < w.size() && !is_diagonal_bracket(w[k + 1]) && order_index(w[k]) > order_index(w[k + 1])) {
        // y z = eps(y,z) z y + <y,z>
        const Letter &y = w[k], &z = w[k + 1];
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        push(std::move(swapped), c * eps(degree(y), degree(z)));
        const LieElement br = A.bracket_basis(basis_index(y), basis_index(z));
        for (std::size_t idx = 0; idx < br.size(); ++idx) {
          if (br[idx].is_zero())
            continue;
          Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
          out.push_back(letter_of(idx));
          out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
          push(std::move(out), c * br[idx]);
        }
        rewritten = true;
      }
    }
    if (rewritten) {
      if (++steps > step_bound)
        throw DepthExceeded("free-algebra rewriting exceeded " + std::to_string(step_bound) + " steps");
      continue;
    }

    // Normal word: x_j = t_{s(j,j)}, <x_i,x_j> = 2 t_{s(i,j)}.
    Exponent alpha(U->p(), 0);
    Scalar coeff = c;
    for (const auto& l : w) {
      ++alpha[order_index(l) - 1];
      if (!l.generator)
        coeff *= Scalar(2);
    }
    result.add_term(alpha, coeff);
  }
  return result;
}

} // namespace lca
