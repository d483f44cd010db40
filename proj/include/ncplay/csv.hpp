#pragma once

#include <string>

#include "ncplay/path.hpp"
#include "ncplay/play.hpp"

namespace ncplay {

/// 17 significant digits; round-trips doubles exactly, so serialized runs
/// are byte-reproducible.
std::string format_g17(double v);

/// Path CSV with header `t,v1,...,vd`; strict increase of t is validated on
/// load.
std::string path_to_csv(const Path& p);
Path path_from_csv(const std::string& text);
Path load_path_csv(const std::string& filename);

/// Trajectory CSV with header `t,u1..ud,y1..yd,x1..xd,w1..wd`.
std::string trajectory_to_csv(const PlaySolution& sol);

void write_text_file(const std::string& filename, const std::string& content);
std::string read_text_file(const std::string& filename);

}  // namespace ncplay
