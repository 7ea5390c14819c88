#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specat/functor.hpp"
#include "specat/verify.hpp"

namespace specat {

using Json = nlohmann::ordered_json;

// The versioned report envelope: {schema, command, inputs, verdict,
// witnesses, timings_ms, seed}. timings_ms is null unless explicitly
// requested, keeping reports byte-reproducible.
Json report_envelope(const std::string& command, const std::vector<std::string>& inputs,
                     const std::string& verdict, Json witnesses,
                     std::optional<Json> timings_ms = std::nullopt,
                     std::optional<unsigned> seed = std::nullopt);

std::string render_json(const Json& j);  // stable 2-space dump with trailing newline

Json functor_json(const FunctorData& f);
Json verify_json(const VerifyRun& run);
std::string verify_text(const VerifyRun& run);

}  // namespace specat
