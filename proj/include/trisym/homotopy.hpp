#pragma once

// Surface homotopy records: per-arc homotopy classes in longitude normal
// form, point-pushing, longitude transfer and the flattening normalization.

#include <map>
#include <string>
#include <vector>

#include "trisym/freegroup.hpp"

namespace trisym::tri {

struct SHArc {
  int sector = 1;  // 1, 2 or 3
  int tail = 0, head = 0;
  fg::LongWord cls;
};

struct SurfaceHomotopyRecord {
  std::vector<int> point_signs;  // +-1 per bridge point, 2b entries
  std::vector<SHArc> arcs;       // b arcs per sector
  long long c[3] = {1, 1, 1};    // patch counts, kept in step with splits
  std::map<std::string, bool> alphabet;  // residual generator -> flat annotation
  int basepoint_sheet = 1;

  long long b() const { return (long long)point_signs.size() / 2; }
  void validate() const;  // degree-3 points, closed-surface combinatorics
  bool connected() const;
  long long euler_characteristic() const { return c[0] + c[1] + c[2] - b(); }
};

// True when the class is l-free and every residual letter is flat-annotated.
bool class_is_flat(const SurfaceHomotopyRecord& r, const fg::LongWord& w);

// Drags bridge point x once around mu: positive points compose on the
// right, negative points by the inverse on the left; all three incident
// arcs are updated.
SurfaceHomotopyRecord point_push(const SurfaceHomotopyRecord& r, int x,
                                 const fg::LongWord& mu);

// Longitude transfer along an arc of family 2 or 3 (index within that
// family): the head-side sector-1 class gains an l^-1 prefix, the tail-side
// class gains an l suffix.  `reversed` swaps the roles of the endpoints.
SurfaceHomotopyRecord transfer_longitude(const SurfaceHomotopyRecord& r, int family,
                                         int arc_index, bool reversed = false);

// Moves the whole longitude count onto the first sector-1 arc.
SurfaceHomotopyRecord concentrate_longitudes(const SurfaceHomotopyRecord& r);

struct FlattenResult {
  SurfaceHomotopyRecord record;
  long long longitude_count = 0;
  bool area_positive = false;
};

// Splits every sector-1 arc whose class has more than one factor into
// single-factor arcs; each split adds a bridge pair, one patch and trivial
// arcs in the other two sectors, preserving the Euler characteristic.
FlattenResult flatten_and_count(const SurfaceHomotopyRecord& r);

// The record of the standard degree-1 surface: one longitude on the single
// sector-1 arc.
SurfaceHomotopyRecord line_homotopy_record();

}  // namespace trisym::tri
