#include "kayles/solver.hpp"

#include "kayles/conjunctive.hpp"
#include "kayles/disjunctive.hpp"
#include "kayles/error.hpp"
#include "kayles/foreclosed.hpp"
#include "kayles/selective.hpp"
#include "kayles/suspense.hpp"

namespace kayles {

std::string Analysis::summary() const {
  if (measure == "sigma") {
    std::string s = "sigma ";
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) s += ',';
      s += components[i].str();
    }
    return components.empty() ? "sigma -" : s;
  }
  if (value) return measure + " " + value->str();
  return measure;
}

bool has_solver(Variant v) {
  return !(v.move_rule == MoveRule::Disjunctive && v.ending == Ending::Long &&
           v.play == Play::Misere);
}

bool is_certified(Variant v) {
  if (!has_solver(v)) return false;
  return !(v.move_rule == MoveRule::Selective && v.play == Play::Misere);
}

Analysis analyze(Variant v, const Position& p, Oracle& oracle) {
  Analysis a;
  switch (v.move_rule) {
    case MoveRule::Disjunctive:
      if (v.ending == Ending::Long) {
        if (v.play == Play::Misere) {
          a.measure = "oracle";
          a.outcome = oracle.outcome(p, v);
          return a;
        }
        a.measure = "nim-sum";
        for (auto n : p.parts()) a.components.push_back(GameValue::nat(rho(n)));
        a.value = GameValue::nat(rho_nim_sum(p));
        a.outcome = disj_normal_outcome(p);
        return a;
      }
      a.measure = "foreclosed";
      for (auto n : p.parts()) {
        a.components.push_back(v.play == Play::Normal
                                   ? fplus(n)
                                   : fminus(n, static_cast<std::size_t>(n)));
      }
      a.value = ddc_value(p, v.play);
      a.immediate_end = v.play == Play::Normal && !p.empty() && p.smallest() <= 3;
      a.outcome = ddc_outcome(p, v.play);
      return a;
    case MoveRule::Conjunctive:
      if (v.ending == Ending::Short) {
        a.measure = "remoteness";
        for (auto n : p.parts()) a.components.push_back(GameValue::nat(remoteness(n, v.play)));
        a.value = GameValue::nat(static_cast<std::uint32_t>(conj_remoteness(p, v.play)));
        a.outcome = conj_outcome(p, v.play);
        return a;
      }
      a.measure = "suspense";
      for (auto n : p.parts()) a.components.push_back(GameValue::nat(suspense(n, v.play)));
      a.value = GameValue::nat(static_cast<std::uint32_t>(ccc_suspense(p, v.play)));
      a.outcome = ccc_outcome(p, v.play);
      return a;
    case MoveRule::Selective: {
      a.measure = "sigma";
      const SigmaRule rule = sigma_rule(v.play, v.ending);
      for (auto n : p.parts()) a.components.push_back(GameValue::nat(sigma_path(n, rule)));
      a.outcome = sel_outcome(p, v.play, v.ending);
      a.value = GameValue::nat(a.outcome == Outcome::N ? 1 : 0);
      return a;
    }
  }
  throw Error(ErrorKind::Unsupported, "unknown variant");
}

CompoundMove best_move(Variant v, const Position& p, Oracle& oracle) {
  switch (v.move_rule) {
    case MoveRule::Disjunctive:
      if (v.ending == Ending::Short) return ddc_best_move(p, v.play);
      if (v.play == Play::Normal) return disj_normal_best_move(p);
      return oracle.best_moves(p, v).front();
    case MoveRule::Conjunctive:
      return v.ending == Ending::Short ? conj_best_move(p, v.play) : ccc_best_move(p, v.play);
    case MoveRule::Selective:
      return sel_best_move(p, v.play, v.ending);
  }
  throw Error(ErrorKind::Unsupported, "unknown variant");
}

namespace {

bool oracle_can_list(const Position& p, Variant v, const Oracle& oracle) {
  const auto& c = oracle.config();
  if (p.total() > c.max_total || static_cast<int>(p.size()) > c.max_components) return false;
  return v.move_rule != MoveRule::Selective ||
         static_cast<int>(p.size()) <= c.max_selective_components;
}

}  // namespace

CompoundMove engine_move(Variant v, const Position& p, Oracle& oracle) {
  if (p.empty()) throw Error(ErrorKind::NoMoves, "no moves from the empty position");
  try {
    if (!is_certified(v)) {
      if (oracle_can_list(p, v, oracle)) return oracle.best_moves(p, v).front();
      if (!has_solver(v)) return first_legal_move(p, v.move_rule);
    }
    return best_move(v, p, oracle);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotWinnable) throw;
  }
  return first_legal_move(p, v.move_rule);
}

}  // namespace kayles
