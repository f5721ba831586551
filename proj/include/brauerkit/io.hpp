#pragma once

// JSON file formats. Palettes and matrix-presented circuit algebras are
// read from disk; check reports are written to disk. Every rational
// serializes as a plain integer when its denominator is 1 and as a
// "p/q" string otherwise, so a written value reloads exactly.

#include <string>

#include "json.hpp"

#include "brauerkit/ca_oracle.hpp"
#include "brauerkit/checks.hpp"
#include "brauerkit/linalg.hpp"
#include "brauerkit/palette.hpp"
#include "brauerkit/scalar.hpp"

namespace brauerkit {

using json = nlohmann::json;

json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);

// Row-major array of rows; a 0 x c or r x 0 matrix keeps its shape in a
// side field, so shapes survive the round trip.
json mat_to_json(const Mat& a);
Mat mat_from_json(const json& j);

// {"colours": ["up","dn"], "omega": {"up":"dn","dn":"up"}}. Colour
// names must be nonempty and free of whitespace, '|' and '@' (they are
// joined into word keys below). omega must be an involution; missing
// entries default to fixed points.
json palette_to_json(const Palette& pal);
Palette palette_from_json(const json& j);
Palette load_palette(const std::string& path);

// Tabulated circuit algebra. Words are colour names joined by single
// spaces ("" is the empty word); keys are "w1|w2" for the product,
// "w @ i j" for contractions, and "w @ p0 p1 ..." for relabellings.
// A loaded oracle owns its tables and throws std::invalid_argument on
// any lookup outside them. "act" is optional.
json oracle_to_json(const CircuitAlgebraOracle& A, int bound);
CircuitAlgebraOracle oracle_from_json(const json& j);
CircuitAlgebraOracle load_oracle(const std::string& path);

json report_json(const FftReport& r);
json report_json(const SftReport& r);
json report_json(const GlReport& r);
json report_json(const CaKernelReport& r);
json report_json(const CaReport& r);

// Canonical dump: two-space indent, keys sorted, trailing newline.
// Identical values produce identical bytes.
std::string dump_json(const json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace brauerkit
