#pragma once

// JSON files for categories, (co)monads and laws. A nested structure may be
// given inline or as a path, resolved against the directory of the file
// that references it.

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "catlaw/distlaw.hpp"
#include "catlaw/fincat.hpp"
#include "catlaw/monad.hpp"
#include "catlaw/twofunctors.hpp"

namespace catlaw::io {

using json = nlohmann::json;

RawCategory parse_raw_category(const json& j);
json to_json(const FinCategory& c);
json to_json(const Functor& f);
json to_json(const NatTrans& alpha);
json to_json(const Monad& m);
json to_json(const Comonad& c);
json to_json(const DistributiveLaw& dl);
json to_json(const MixedDistributiveLaw& ml);
// {S, T, lifted: {endofunctor, mu, eta}} with ids of the constructed
// Eilenberg-Moore (resp. Kleisli, under "extended") category.
json to_json(const LiftedMonad& lm);
json to_json(const KleisliExtension& ke);

// Reads files, caching categories by canonical path so structures that share
// a category file share one validated value. Errors are Parse errors (bad
// JSON, missing fields, unreadable files) or whatever validation raises.
class Loader {
 public:
  CategoryPtr category(const std::filesystem::path& file);
  Monad monad(const std::filesystem::path& file);
  Comonad comonad(const std::filesystem::path& file);
  DistributiveLaw dist_law(const std::filesystem::path& file);
  MixedDistributiveLaw mixed_law(const std::filesystem::path& file);
  // Rebuilds the constructed category from S (resp. T) and re-types the
  // stored functor against it. The lifting laws are not checked here.
  LiftedMonad lifting(const std::filesystem::path& file, const EnumerationOptions& opts = {});
  KleisliExtension extension(const std::filesystem::path& file);

  CategoryPtr category(const json& j, const std::filesystem::path& base);
  Monad monad(const json& j, const std::filesystem::path& base);
  Comonad comonad(const json& j, const std::filesystem::path& base);

 private:
  std::map<std::filesystem::path, CategoryPtr> categories_;
};

json read_json(const std::filesystem::path& file);
void write_json(const std::filesystem::path& file, const json& j);

}  // namespace catlaw::io
