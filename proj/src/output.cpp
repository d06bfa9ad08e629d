#include "opsem/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace opsem {

std::string format_bits(double bits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", bits);
  return buf;
}

std::size_t emit_event_log(const History& history, std::ostream& out,
                           std::optional<std::uint64_t> seed) {
  std::size_t lines = 0;
  out << R"({"type":"start","candidates":)" << history.initial_candidates;
  if (seed) out << R"(,"seed":)" << *seed;
  out << "}\n";
  ++lines;

  for (const auto& s : history.steps) {
    out << R"({"type":"step","idx":)" << s.step_index                    //
        << R"(,"state":)" << s.query.state.index                        //
        << R"(,"signal":)" << s.query.signal.index                      //
        << R"(,"post":)" << s.observation.post.index                    //
        << R"(,"candidates":)" << s.candidates_after                    //
        << R"(,"entropy":)" << format_bits(s.entropy_after) << "}\n";
    ++lines;
  }

  out << R"({"type":"end","converged":)" << (history.converged ? "true" : "false")
      << R"(,"final_candidates":[)";
  for (std::size_t i = 0; i < history.final_candidates.size(); ++i) {
    if (i) out << ',';
    out << history.final_candidates[i];
  }
  out << "]}\n";
  ++lines;

  if (!out) throw Error(ErrorCode::IoError, "failed to write event log");
  return lines;
}

std::string summary_row(std::string_view run_id, std::size_t members,
                        std::string_view strategy, std::uint64_t seed,
                        const History& history) {
  std::ostringstream row;
  row << run_id << ',' << members << ',' << strategy << ',' << seed << ','
      << history.steps.size() << ',' << (history.converged ? "true" : "false") << ','
      << format_bits(std::log2(static_cast<double>(history.final_candidates.size())));
  return row.str();
}

void write_files_atomically(
    const std::filesystem::path& dir,
    const std::vector<std::pair<std::string, std::string>>& files) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::IoError,
                "cannot create output directory " + dir.string() + ": " + ec.message());
  }

  std::vector<fs::path> temps;
  auto cleanup = [&] {
    for (const auto& t : temps) fs::remove(t, ec);
  };
  for (const auto& [name, content] : files) {
    auto tmp = dir / ("." + name + ".tmp");
    temps.push_back(tmp);
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << content;
    f.close();
    if (!f) {
      cleanup();
      throw Error(ErrorCode::IoError, "failed to write " + tmp.string());
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    fs::rename(temps[i], dir / files[i].first, ec);
    if (ec) {
      cleanup();
      throw Error(ErrorCode::IoError,
                  "failed to move " + files[i].first + " into place: " + ec.message());
    }
  }
}

}  // namespace opsem
