#pragma once

#include <cmath>

namespace darb {

// Decibel <-> linear power conversions. All internal arithmetic in this
// library is linear-scale watts; dBm/dBW only appear at configuration
// boundaries and in CSV columns whose names carry the unit suffix.

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }

inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

inline double watts_to_dbw(double w) { return 10.0 * std::log10(w); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace darb
