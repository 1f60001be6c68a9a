#pragma once

#include <string>

#include "nullcone/catalog.hpp"
#include "nullcone/root_data.hpp"

namespace nullcone::test {

inline ValidatedProblem must(const Problem& p) { return validate(p).value(); }

inline ValidatedProblem cat(const std::string& spec) { return must(catalog::from_spec(spec)); }

}  // namespace nullcone::test
