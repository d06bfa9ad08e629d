#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opsem/learning.hpp"

namespace opsem {

/// Write a history as JSON lines: a start record, one record per step, an end
/// record. Returns the number of lines written.
std::size_t emit_event_log(const History& history, std::ostream& out,
                           std::optional<std::uint64_t> seed = std::nullopt);

inline constexpr std::string_view kSummaryHeader =
    "run_id,members,strategy,seed,steps,converged,final_entropy";

std::string summary_row(std::string_view run_id, std::size_t members,
                        std::string_view strategy, std::uint64_t seed,
                        const History& history);

/// Entropy formatted with six decimals, as used in every output file.
std::string format_bits(double bits);

/// Writes every file to a temporary name first and renames them into place
/// only after all writes succeeded.
void write_files_atomically(
    const std::filesystem::path& dir,
    const std::vector<std::pair<std::string, std::string>>& files);

}  // namespace opsem
