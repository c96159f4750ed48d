#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lpp/clusters.hpp"
#include "lpp/field.hpp"
#include "lpp/geodesics.hpp"
#include "lpp/time_source.hpp"

namespace lpp {

// Parent-map dump: magic "LPPT", version byte 1, N as 64-bit little-endian
// unsigned, then parent bits row-major (y = 0 first), LSB-first within each
// byte, each row padded to a byte boundary. Square-mode fields only; the
// format carries no mode marker.
void write_parent_map(std::ostream& out, const PassageField& field);
ParentMap read_parent_map(std::istream& in);

void write_interface_csv(std::ostream& out, const InterfacePath& path);
void write_path_csv(std::ostream& out, const GeodesicPath& path);
void write_splits_csv(std::ostream& out, const std::vector<SplitAngle>& splits);
void write_boundary_csv(std::ostream& out, const ClusterLabeling& labeling);
void write_times_csv(std::ostream& out, const TimeGrid& grid);

// Reads a (x,y,time) CSV back into a grid sized to fit the listed sites.
TimeGrid read_times_csv(std::istream& in);

}  // namespace lpp
