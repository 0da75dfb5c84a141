#include "branchworlds/fine_graining.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "branchworlds/error.hpp"

namespace branchworlds {

Game apply_fine_grain(const Game& game, const FineGrainStep& step, SplitRule rule) {
  if (game.exponent().is_max()) {
    throw Error(ErrorCode::MaxNormUnsupported, "p-norm fine-graining applied to a max-norm game");
  }
  if (step.row_index >= game.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "fine-grain row " + std::to_string(step.row_index) +
                                                " outside a game of " + std::to_string(game.size()) +
                                                " rows");
  }
  if (step.parts.empty()) {
    throw Error(ErrorCode::ConstraintViolated, "a fine-grain step needs at least one part");
  }
  const GameRow& parent = game[step.row_index];
  if (rule == SplitRule::KentIntegral) {
    if (game.exponent().p() != 1) {
      throw Error(ErrorCode::ConstraintViolated, "integral world splits require p = 1");
    }
    if (!is_integer(parent.coefficient.mag_p())) {
      throw Error(ErrorCode::ConstraintViolated, "parent row is not a whole number of worlds");
    }
  }

  Rational mass = 0;
  for (const auto& part : step.parts) {
    if (rule == SplitRule::KentIntegral && !is_integer(part.mag_p())) {
      throw Error(ErrorCode::ConstraintViolated,
                  "world multiplicity " + to_string(part.mag_p()) + " is not an integer");
    }
    mass += part.mag_p();
  }
  if (mass != parent.coefficient.mag_p()) {
    throw Error(ErrorCode::ConstraintViolated,
                "parts carry mass " + to_string(mass) + " but the row has " +
                    to_string(parent.coefficient.mag_p()));
  }

  std::vector<GameRow> rows;
  rows.reserve(game.size() + step.parts.size());
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (i != step.row_index) {
      rows.push_back(game[i]);
      continue;
    }
    for (const auto& part : step.parts) {
      if (sgn(part.mag_p()) != 0) rows.push_back({part, parent.reward});
    }
  }
  return Game(std::move(rows), game.exponent());
}

Game replay(const Game& game, const std::vector<FineGrainStep>& steps, SplitRule rule) {
  Game current = game;
  for (const auto& step : steps) current = apply_fine_grain(current, step, rule);
  return current;
}

Symmetrization symmetrize(const Game& game, const SymmetrizeOptions& options) {
  if (game.exponent().is_max()) {
    throw Error(ErrorCode::MaxNormUnsupported, "max-norm games cannot be symmetrized");
  }
  BigInt d = 1;
  for (const auto& row : game.rows()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), row.coefficient.mag_p().get_den_mpz_t());
  }

  SymmetrizationTrace trace;
  trace.common_denominator = d;
  BigInt total_rows = 0;
  for (const auto& row : game.rows()) {
    BigInt a = row.coefficient.mag_p().get_num() * (d / row.coefficient.mag_p().get_den());
    total_rows += a;
    trace.multiplicities.push_back(std::move(a));
  }
  if (total_rows > BigInt(std::to_string(options.max_rows), 10)) {
    throw Error(ErrorCode::SizeOverflow, "symmetric game would need " + to_string(total_rows) +
                                             " rows (bound " + std::to_string(options.max_rows) +
                                             ")");
  }

  const ExactCoefficient unit(Rational(BigInt(1), d), Rational(0));
  std::size_t position = 0;
  for (std::size_t i = 0; i < game.size(); ++i) {
    const std::size_t count = trace.multiplicities[i].get_ui();
    const bool already_unit = count == 1 && game[i].coefficient == unit;
    if (!already_unit) {
      trace.steps.push_back({position, std::vector<ExactCoefficient>(count, unit)});
    }
    position += count;
  }

  std::vector<GameRow> rows;
  rows.reserve(position);
  for (std::size_t i = 0; i < game.size(); ++i) {
    const std::size_t count = trace.multiplicities[i].get_ui();
    for (std::size_t j = 0; j < count; ++j) rows.push_back({unit, game[i].reward});
  }
  return {Game(std::move(rows), game.exponent()), std::move(trace)};
}

Rational symmetric_value(const Game& symmetric_game) {
  if (!is_symmetric(symmetric_game)) {
    throw Error(ErrorCode::ConstraintViolated, "game is not symmetric");
  }
  Rational sum = 0;
  for (const auto& row : symmetric_game.rows()) sum += row.reward;
  Rational mean = sum / Rational(static_cast<unsigned long>(symmetric_game.size()));
  mean.canonicalize();
  return mean;
}

Rational value_via_symmetrization(const Game& game, const SymmetrizeOptions& options) {
  return symmetric_value(symmetrize(game, options).game);
}

// ---------------------------------------------------------------------------

namespace {

// A refinement state: sorted multiset of (magnitude, reward class).
using Element = std::pair<Rational, std::size_t>;
using State = std::vector<Element>;

struct ElementLess {
  bool operator()(const Element& a, const Element& b) const {
    if (a.second != b.second) return a.second < b.second;
    return cmp(a.first, b.first) < 0;
  }
};

struct StateLess {
  bool operator()(const State& a, const State& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ElementLess{});
  }
};

bool symmetric_state(const State& s) {
  return std::all_of(s.begin(), s.end(), [&](const Element& e) { return e.first == s[0].first; });
}

std::vector<Rational> class_maxima(const State& s, std::size_t classes) {
  std::vector<Rational> maxima(classes, Rational(0));
  for (const auto& [mag, cls] : s) maxima[cls] = std::max(maxima[cls], mag);
  return maxima;
}

// Non-decreasing part lists of length `count` drawn from `candidates`
// (sorted ascending) whose largest element equals `top`.
void part_lists(const std::vector<Rational>& candidates, const Rational& top, std::size_t count,
                std::vector<Rational>& current, std::size_t from,
                std::vector<std::vector<Rational>>& out) {
  if (current.size() == count) {
    if (current.back() == top) out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < candidates.size(); ++i) {
    current.push_back(candidates[i]);
    part_lists(candidates, top, count, current, i, out);
    current.pop_back();
  }
}

}  // namespace

ObstructionWitness max_norm_obstruction(const Game& game, const ObstructionOptions& options) {
  if (!game.exponent().is_max()) {
    throw Error(ErrorCode::NotMaxMode, "the obstruction search needs a max-norm game");
  }
  if (is_symmetric(game) || std::all_of(game.rows().begin(), game.rows().end(), [&](const GameRow& r) {
        return r.coefficient.mag_p() == game[0].coefficient.mag_p();
      })) {
    throw Error(ErrorCode::SymmetricInput, "all magnitudes are equal; nothing to obstruct");
  }

  ObstructionWitness witness;
  witness.depth = options.depth;

  State initial;
  std::set<Rational> base_magnitudes;
  for (const auto& row : game.rows()) {
    auto it = std::find(witness.class_rewards.begin(), witness.class_rewards.end(), row.reward);
    std::size_t cls = static_cast<std::size_t>(it - witness.class_rewards.begin());
    if (it == witness.class_rewards.end()) witness.class_rewards.push_back(row.reward);
    initial.emplace_back(row.coefficient.mag_p(), cls);
    base_magnitudes.insert(row.coefficient.mag_p());
  }
  std::sort(initial.begin(), initial.end(), ElementLess{});
  const std::size_t classes = witness.class_rewards.size();
  witness.class_max_magnitudes = class_maxima(initial, classes);

  // Candidate part magnitudes for a parent of magnitude m.
  std::map<Rational, std::vector<Rational>> candidate_cache;
  auto candidates_for = [&](const Rational& m) -> const std::vector<Rational>& {
    auto it = candidate_cache.find(m);
    if (it != candidate_cache.end()) return it->second;
    std::set<Rational> c;
    for (const auto& b : base_magnitudes) {
      if (b <= m) c.insert(b);
    }
    for (std::size_t k = 1; k <= options.grid; ++k) {
      Rational part = m * Rational(static_cast<unsigned long>(k),
                                   static_cast<unsigned long>(options.grid + 1));
      part.canonicalize();
      c.insert(part);
    }
    c.insert(m);
    return candidate_cache.emplace(m, std::vector<Rational>(c.begin(), c.end())).first->second;
  };

  std::set<State, StateLess> seen{initial};
  std::vector<State> frontier{initial};
  for (std::size_t level = 0; level < options.depth; ++level) {
    std::vector<State> next;
    for (const State& state : frontier) {
      for (std::size_t i = 0; i < state.size(); ++i) {
        if (i > 0 && state[i] == state[i - 1]) continue;  // identical elements split identically
        const auto& [mag, cls] = state[i];
        const auto& cands = candidates_for(mag);
        for (std::size_t parts = 2; parts <= options.max_parts; ++parts) {
          std::vector<std::vector<Rational>> lists;
          std::vector<Rational> scratch;
          part_lists(cands, mag, parts, scratch, 0, lists);
          for (const auto& list : lists) {
            State child;
            child.reserve(state.size() + parts - 1);
            for (std::size_t j = 0; j < state.size(); ++j) {
              if (j != i) child.push_back(state[j]);
            }
            for (const auto& part : list) child.emplace_back(part, cls);
            std::sort(child.begin(), child.end(), ElementLess{});
            if (seen.insert(child).second) next.push_back(std::move(child));
          }
        }
      }
    }
    frontier = std::move(next);
  }

  for (const State& s : seen) {
    ++witness.refinements_explored;
    if (symmetric_state(s)) ++witness.symmetric_refinements;
    if (class_maxima(s, classes) != witness.class_max_magnitudes) witness.invariant_held = false;
  }
  witness.obstruction_confirmed = witness.symmetric_refinements == 0 && witness.invariant_held;
  return witness;
}

}  // namespace branchworlds
