#include "catlaw/report.hpp"

#include <algorithm>

namespace catlaw {

const std::vector<std::string>& law_tags() {
  static const std::vector<std::string> all = {
      tags::kCategoryAxioms,
      tags::kCategoryAssociativity,
      tags::kFunctorSourceTarget,
      tags::kFunctorIdentity,
      tags::kFunctorComposition,
      tags::kNatComponentType,
      tags::kNaturality,
      tags::kMonadAssoc,
      tags::kMonadLeftUnit,
      tags::kMonadRightUnit,
      tags::kComonadCoassoc,
      tags::kComonadLeftCounit,
      tags::kComonadRightCounit,
      tags::kTriangleL,
      tags::kTriangleR,
      tags::kSquareR,
      tags::kSquareL,
      tags::kStoredMate,
      tags::kDistTyping,
      tags::kDistNaturality,
      tags::kDistSMult,
      tags::kDistSUnit,
      tags::kDistTMult,
      tags::kDistTUnit,
      tags::kMixedTyping,
      tags::kMixedNaturality,
      tags::kMixedSMult,
      tags::kMixedSUnit,
      tags::kMixedGComult,
      tags::kMixedGCounit,
      tags::kMndOneCellMult,
      tags::kMndOneCellUnit,
      tags::kMndTwoCell,
      tags::kMndBulletOneCellMult,
      tags::kMndBulletOneCellUnit,
      tags::kMndBulletTwoCell,
      tags::kCoMndOneCellComult,
      tags::kCoMndOneCellCounit,
      tags::kCoMndTwoCell,
      tags::kAdjTwoCellMate,
      tags::kAdjTwoCellWhisker,
      tags::kAdjTwoCellEquivalence,
      tags::kLiftedSquare,
      tags::kLiftedStructure,
      tags::kExtensionSquare,
      tags::kRoundTrip,
      tags::kCountEquality,
      tags::kJointCompat,
      tags::kMixedCompat,
      tags::kHomIso,
      tags::kHomIsoFunctorial,
      tags::kPointwiseCriterion,
      tags::kOracleCount,
      tags::kCriterion,
  };
  return all;
}

bool is_registered_tag(const std::string& tag) {
  const auto& all = law_tags();
  return std::find(all.begin(), all.end(), tag) != all.end();
}

}  // namespace catlaw
