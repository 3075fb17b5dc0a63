#pragma once

#include <map>
#include <string>

namespace poissoncap {

enum class BoundKind { Lower, Upper, Oracle };

// One bound evaluation: a value in nats plus the parameters that produced
// it. When a precondition fails, valid is false and flag carries the stable
// reason code; flag may also carry non-fatal warnings on a valid report.
struct BoundReport {
  double value = 0.0;
  BoundKind kind = BoundKind::Upper;
  bool valid = true;
  std::string flag;
  std::string note;
  std::map<std::string, double> params;
};

}  // namespace poissoncap
