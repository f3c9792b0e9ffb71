#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace landaulab {

struct RunArtifact {
    std::string name;  // file name relative to the output directory
    std::string contents;
};

struct RunResult {
    int exit_code = 0;  // 0 all checks passed, 2 a check or certificate failed
    bool pass = true;
    std::string summary;  // canonical JSON document, newline-terminated
    std::vector<RunArtifact> artifacts;
};

/// Execute one named task from a JSON configuration document.  Malformed,
/// unknown, or out-of-contract configuration throws ConfigError; failed
/// computations and failed checks come back as exit_code 2 with the reason
/// recorded in the summary.  Identical (task, config, seed) inputs produce
/// byte-identical summaries and artifacts.
RunResult run_task(const std::string& task, const std::string& config_text,
                   std::optional<unsigned> seed_override = std::nullopt);

const std::vector<std::string>& run_task_names();

std::uint64_t fnv1a64(const std::string& text);

}  // namespace landaulab
