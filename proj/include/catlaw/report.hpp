#pragma once

#include <string>
#include <vector>

namespace catlaw {

// One checked law instance (or one violation, for instance-style checkers).
struct Finding {
  std::string tag;      // registered law tag, see law_tags()
  bool passed = true;
  std::string witness;  // first counterexample, empty when passed
};

class Report {
 public:
  void pass(std::string tag) { findings_.push_back({std::move(tag), true, {}}); }
  void fail(std::string tag, std::string witness) {
    findings_.push_back({std::move(tag), false, std::move(witness)});
  }
  void add(Finding f) { findings_.push_back(std::move(f)); }
  void merge(const Report& other) {
    findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
  }

  bool ok() const {
    for (const auto& f : findings_)
      if (!f.passed) return false;
    return true;
  }
  bool empty() const { return findings_.empty(); }
  std::size_t size() const { return findings_.size(); }
  const std::vector<Finding>& findings() const { return findings_; }

  std::vector<Finding> failures() const {
    std::vector<Finding> out;
    for (const auto& f : findings_)
      if (!f.passed) out.push_back(f);
    return out;
  }
  bool failed(const std::string& tag) const {
    for (const auto& f : findings_)
      if (!f.passed && f.tag == tag) return true;
    return false;
  }
  const Finding* find(const std::string& tag) const {
    for (const auto& f : findings_)
      if (f.tag == tag) return &f;
    return nullptr;
  }

 private:
  std::vector<Finding> findings_;
};

// Every tag a checker may emit. Reports never carry an unregistered tag.
const std::vector<std::string>& law_tags();
bool is_registered_tag(const std::string& tag);

namespace tags {
// fincat
inline constexpr const char* kCategoryAxioms = "category.axioms";
inline constexpr const char* kCategoryAssociativity = "category.associativity";
inline constexpr const char* kFunctorSourceTarget = "functor.source-target";
inline constexpr const char* kFunctorIdentity = "functor.identity";
inline constexpr const char* kFunctorComposition = "functor.composition";
inline constexpr const char* kNatComponentType = "nat.component-type";
inline constexpr const char* kNaturality = "nat.naturality";
// monad / comonad
inline constexpr const char* kMonadAssoc = "monad.associativity";
inline constexpr const char* kMonadLeftUnit = "monad.left-unit";
inline constexpr const char* kMonadRightUnit = "monad.right-unit";
inline constexpr const char* kComonadCoassoc = "comonad.coassociativity";
inline constexpr const char* kComonadLeftCounit = "comonad.left-counit";
inline constexpr const char* kComonadRightCounit = "comonad.right-counit";
// adjunction
inline constexpr const char* kTriangleL = "adjunction.triangle-left";
inline constexpr const char* kTriangleR = "adjunction.triangle-right";
inline constexpr const char* kSquareR = "square.right-adjoints-commute";
inline constexpr const char* kSquareL = "square.left-adjoints-commute";
inline constexpr const char* kStoredMate = "cell.stored-mate";
// distributive laws
inline constexpr const char* kDistTyping = "distlaw.typing";
inline constexpr const char* kDistNaturality = "distlaw.naturality";
inline constexpr const char* kDistSMult = "distlaw.S-multiplication";
inline constexpr const char* kDistSUnit = "distlaw.S-unit";
inline constexpr const char* kDistTMult = "distlaw.T-multiplication";
inline constexpr const char* kDistTUnit = "distlaw.T-unit";
inline constexpr const char* kMixedTyping = "mixedlaw.typing";
inline constexpr const char* kMixedNaturality = "mixedlaw.naturality";
inline constexpr const char* kMixedSMult = "mixedlaw.S-multiplication";
inline constexpr const char* kMixedSUnit = "mixedlaw.S-unit";
inline constexpr const char* kMixedGComult = "mixedlaw.G-comultiplication";
inline constexpr const char* kMixedGCounit = "mixedlaw.G-counit";
// 2-cells
inline constexpr const char* kMndOneCellMult = "mnd.1cell-multiplication";
inline constexpr const char* kMndOneCellUnit = "mnd.1cell-unit";
inline constexpr const char* kMndTwoCell = "mnd.2cell";
inline constexpr const char* kMndBulletOneCellMult = "mndbullet.1cell-multiplication";
inline constexpr const char* kMndBulletOneCellUnit = "mndbullet.1cell-unit";
inline constexpr const char* kMndBulletTwoCell = "mndbullet.2cell";
inline constexpr const char* kCoMndOneCellComult = "comnd.1cell-comultiplication";
inline constexpr const char* kCoMndOneCellCounit = "comnd.1cell-counit";
inline constexpr const char* kCoMndTwoCell = "comnd.2cell";
inline constexpr const char* kAdjTwoCellMate = "adj.2cell-mate-condition";
inline constexpr const char* kAdjTwoCellWhisker = "adj.2cell-adjoint-condition";
inline constexpr const char* kAdjTwoCellEquivalence = "adj.2cell-conditions-agree";
// theorem-level checks
inline constexpr const char* kLiftedSquare = "lifting.forgetful-square";
inline constexpr const char* kLiftedStructure = "lifting.structure-compatibility";
inline constexpr const char* kExtensionSquare = "extension.kleisli-square";
inline constexpr const char* kRoundTrip = "roundtrip.exact";
inline constexpr const char* kCountEquality = "bijection.count-equality";
inline constexpr const char* kJointCompat = "compatibility.joint";
inline constexpr const char* kMixedCompat = "compatibility.mixed";
inline constexpr const char* kHomIso = "homiso.inverse";
inline constexpr const char* kHomIsoFunctorial = "homiso.functorial";
inline constexpr const char* kPointwiseCriterion = "poset.pointwise-criterion";
inline constexpr const char* kOracleCount = "oracle.count";
inline constexpr const char* kCriterion = "acceptance.criterion";
}  // namespace tags

}  // namespace catlaw
