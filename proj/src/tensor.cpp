#include "gbss/tensor.hpp"

#include <stdexcept>

namespace gbss::tensor {

namespace {

Int rat_to_int(const Rat& r, const char* what) {
  if (r.get_den() != 1) throw std::invalid_argument(std::string(what) + ": not an integer");
  if (!r.get_num().fits_slong_p()) throw std::invalid_argument(std::string(what) + ": out of range");
  return r.get_num().get_si();
}

}  // namespace

TensorShape TensorShape::make(Int a, int b, int c, Rat delta, Rat r) {
  if (a < 1) throw std::invalid_argument("tensor shape: a must be positive");
  if (b < 1 || c < 1) throw std::invalid_argument("tensor shape: b, c must be positive");
  if (delta <= 0) throw std::invalid_argument("tensor shape: delta must be positive");
  Rat ar = Rat(static_cast<long>(a)) * r;
  if (ar.get_den() != 1 || ar <= 0) throw std::invalid_argument("tensor shape: a*r must be a positive integer");
  return TensorShape{a, b, c, std::move(delta), std::move(r)};
}

FiltrationWithOracle FiltrationWithOracle::make(const TensorShape& shape, std::vector<Rat> ranks,
                                                std::vector<Rat> weights,
                                                std::vector<curve::LinearPoly> hilbert,
                                                std::set<std::vector<int>> admissible) {
  if (ranks.empty()) throw std::invalid_argument("filtration: empty rank list");
  int p = static_cast<int>(ranks.size()) - 1;
  if (static_cast<int>(weights.size()) != p || static_cast<int>(hilbert.size()) != p)
    throw std::invalid_argument("filtration: weights and hilbert lists must have length p");
  if (ranks.back() != shape.r) throw std::invalid_argument("filtration: top rank must equal r");
  for (int i = 0; i < p; ++i) {
    if (ranks[i] >= ranks[i + 1]) throw std::invalid_argument("filtration: ranks must strictly increase");
    if (weights[i] <= 0) throw std::invalid_argument("filtration: weights must be positive");
  }
  for (const Rat& ri : ranks) {
    Rat ar = Rat(static_cast<long>(shape.a)) * ri;
    if (ar.get_den() != 1 || ar < 1)
      throw std::invalid_argument("filtration: each a*r_i must be a positive integer");
  }
  for (const auto& tup : admissible) {
    if (static_cast<int>(tup.size()) != shape.b)
      throw std::invalid_argument("admissible tuple has wrong arity");
    for (int ix : tup)
      if (ix < 1 || ix > p + 1) throw std::invalid_argument("admissible tuple index out of range");
    // Upward closure: a nonzero restriction stays nonzero on larger steps.
    std::vector<int> bigger(tup);
    for (int k = 0; k < shape.b; ++k) {
      for (int j = tup[k] + 1; j <= p + 1; ++j) {
        bigger[k] = j;
        if (!admissible.count(bigger))
          throw std::invalid_argument("admissible set is not upward closed");
      }
      bigger[k] = tup[k];
    }
  }
  if (!admissible.count(std::vector<int>(shape.b, p + 1)))
    throw std::invalid_argument("the all-top tuple must be admissible (the tensor field is nonzero)");
  return FiltrationWithOracle{std::move(ranks), std::move(weights), std::move(hilbert), std::move(admissible)};
}

std::vector<Int> xi_vector(const Rat& j, Int a, const Rat& r) {
  if (j < 0 || j > r) throw std::invalid_argument("xi_vector: need 0 <= j <= r");
  Int aj = rat_to_int(Rat(static_cast<long>(a)) * j, "xi_vector: a*j");
  Int ar = rat_to_int(Rat(static_cast<long>(a)) * r, "xi_vector: a*r");
  std::vector<Int> xi(ar);
  for (Int k = 0; k < ar; ++k) xi[k] = k < aj ? aj - ar : aj;
  return xi;
}

std::vector<Rat> lambda_vector(const FiltrationWithOracle& f, const TensorShape& shape) {
  Int ar = rat_to_int(Rat(static_cast<long>(shape.a)) * shape.r, "lambda_vector: a*r");
  std::vector<Rat> lambda(ar, Rat(0));
  for (int i = 0; i < f.p(); ++i) {
    std::vector<Int> xi = xi_vector(f.ranks[i], shape.a, shape.r);
    for (Int k = 0; k < ar; ++k) lambda[k] += f.weights[i] * Rat(static_cast<long>(xi[k]));
  }
  return lambda;
}

Rat mu(const FiltrationWithOracle& f, const TensorShape& shape) {
  if (f.admissible.empty()) throw std::invalid_argument("mu: no admissible tuple");
  std::vector<Rat> lambda = lambda_vector(f, shape);
  bool first = true;
  Rat best(0);
  for (const auto& tup : f.admissible) {
    Rat s(0);
    for (int ix : tup) {
      Int pos = rat_to_int(Rat(static_cast<long>(shape.a)) * f.ranks[ix - 1], "mu: a*r_i");
      s += lambda[pos - 1];  // lambda is 1-indexed in the defining formula
    }
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  return -best;
}

DeltaSS delta_ss(const FiltrationWithOracle& f, const TensorShape& shape, const curve::LinearPoly& p_total) {
  curve::LinearPoly lhs{Rat(0), Rat(0)};
  for (int i = 0; i < f.p(); ++i) {
    curve::LinearPoly term = p_total.scaled(f.ranks[i]) - f.hilbert[i].scaled(shape.r);
    lhs = lhs + term.scaled(f.weights[i]);
  }
  lhs.constant += shape.delta * mu(f, shape);
  return DeltaSS{lhs, lhs.eventual_sign() >= 0};
}

}  // namespace gbss::tensor
