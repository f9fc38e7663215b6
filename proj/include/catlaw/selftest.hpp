#pragma once

#include "catlaw/enumerate.hpp"
#include "catlaw/verification.hpp"

namespace catlaw {

// The fixture-corpus acceptance suite. Each criterion contributes detailed
// checks plus one summary entry tagged acceptance.criterion with id
// "criterion-<n>". Criterion 9 reruns criteria 1-8 with one and with eight
// jobs and compares the serialized reports.
VerificationReport run_selftest(const EnumerationOptions& opts, std::vector<std::string> command = {"selftest"});

// Criteria 1-8 only.
VerificationReport run_selftest_core(const EnumerationOptions& opts);

}  // namespace catlaw
