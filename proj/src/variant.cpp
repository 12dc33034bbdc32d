#include "kayles/variant.hpp"

#include "kayles/error.hpp"

namespace kayles {

namespace {

const char* prefix(MoveRule rule, Ending ending) {
  switch (rule) {
    case MoveRule::Disjunctive: return ending == Ending::Long ? "disj" : "ddc";
    case MoveRule::Conjunctive: return ending == Ending::Short ? "conj" : "ccc";
    case MoveRule::Selective: return ending == Ending::Long ? "sel" : "ssc";
  }
  return "?";
}

const char* compound_name(MoveRule rule, Ending ending) {
  switch (rule) {
    case MoveRule::Disjunctive:
      return ending == Ending::Long ? "disjunctive compound" : "diminished disjunctive compound";
    case MoveRule::Conjunctive:
      return ending == Ending::Short ? "conjunctive compound" : "continued conjunctive compound";
    case MoveRule::Selective:
      return ending == Ending::Long ? "selective compound" : "shortened selective compound";
  }
  return "?";
}

}  // namespace

std::string Variant::name() const {
  return std::string(prefix(move_rule, ending)) + (play == Play::Normal ? "-normal" : "-misere");
}

std::string Variant::conway_name() const {
  return std::string(compound_name(move_rule, ending)) +
         (play == Play::Normal ? ", normal play" : ", misere play");
}

int Variant::index() const {
  return static_cast<int>(move_rule) * 4 + static_cast<int>(ending) * 2 + static_cast<int>(play);
}

const std::array<Variant, 12>& all_variants() {
  static const std::array<Variant, 12> variants = [] {
    std::array<Variant, 12> out{};
    int i = 0;
    for (auto rule : {MoveRule::Disjunctive, MoveRule::Conjunctive, MoveRule::Selective}) {
      for (auto ending : {Ending::Long, Ending::Short}) {
        for (auto play : {Play::Normal, Play::Misere}) out[i++] = Variant{rule, ending, play};
      }
    }
    return out;
  }();
  return variants;
}

Variant parse_variant(std::string_view name) {
  for (const auto& v : all_variants()) {
    if (v.name() == name) return v;
  }
  throw Error(ErrorKind::Parse, "unknown variant '" + std::string(name) + "'");
}

bool ends_game(const Transition& t, Ending ending) {
  if (t.successor.empty()) return true;
  return ending == Ending::Short && t.emptied_components > 0;
}

}  // namespace kayles
