#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "interp/group.hpp"
#include "interp/polymat.hpp"
#include "interp/riordan.hpp"
#include "interp/series.hpp"

namespace interp::io {

using nlohmann::json;

enum class Format { json, csv, pretty };

Format parse_format(std::string_view name);

/// "p/q,p/q,..." (blanks allowed, at least one entry).
std::vector<Rat> parse_rat_list(std::string_view text);

/// Text grammar "[val=v;]c0,c1,...", "preset:NAME@N", or a JSON object
/// {"val","order","coeffs","param"} with a null param.
SeriesQ parse_series(std::string_view text);
/// Inverse of the text grammar: "val=v;" only when val != 0.
std::string series_text(const SeriesQ& a);

json to_json(const Rat& q);
Rat rat_from_json(const json& j);

/// {"val","order","coeffs":["p/q",...],"param":null}
json to_json(const SeriesQ& a);
/// Same, with "param" set and each coefficient a list of its
/// coefficients in the parameter.
json to_json(const SeriesP& a);
SeriesQ series_from_json(const json& j);
SeriesP series_p_from_json(const json& j);

/// {"A": series, "alpha": series}
json to_json(const GroupElem& g);

/// {"n":N,"rows":[["1"],["1","1"],...]}
json to_json(const TriMatQ& m);
TriMatQ trimat_from_json(const json& j);

/// {"K":k,"polys":[["1"],["0","1"],...]}, inner lists in u.
json to_json(const PolyMat& p);
PolyMat polymat_from_json(const json& j);
/// JSON text, or "@path" to read it from a file.
PolyMat parse_polymat(std::string_view text);

/// JSON text parsing that reports failures as ParseError.
json parse_json(std::string_view text);

std::string render(const SeriesQ& a, Format f);
std::string render(const SeriesP& a, Format f);
std::string render(const GroupElem& g, Format f);
std::string render(const TriMatQ& m, Format f);
std::string render(const PolyMat& p, Format f);

}  // namespace interp::io
