#pragma once

#include "rmhull/associated.hpp"

#include <json.hpp>

#include <string>

namespace rmhull {

/// All JSON in this library uses insertion-ordered objects so emitted files
/// are stable and diffable.
using Json = nlohmann::ordered_json;

/// Field elements are written as base-p digit arrays, lowest power first:
/// a middle-field element is [d0, ..., d_{e-1}]; a top-field element is a
/// list of m such blocks, one per power of the extension generator.
Json mid_to_json(const Tower& tw, const MidElement& x);
MidElement mid_from_json(const Tower& tw, const Json& j, const std::string& path);
Json top_to_json(const Tower& tw, const TopElement& x);
TopElement top_from_json(const Tower& tw, const Json& j, const std::string& path);

/// {"rows", "cols", "level": "mid"|"top", "entries": [[element, ...], ...]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Tower& tw, const Json& j, const std::string& path);

/// {"p", "e", "m"}
Json tower_to_json(const Tower& tw);
Tower tower_from_json(const Json& j, const std::string& path);

/// {"matrix", "source", "target"}
Json witness_to_json(const Witness& w);
Witness witness_from_json(const Tower& tw, const Json& j, const std::string& path);

/// {"tower", "n", "k", "id", "generator", "witness_chain"}.  The loader
/// accepts any full-rank generator (it is canonicalized on load); the writer
/// always emits the canonical one.
Json code_to_json(const RankCode& c);
RankCode code_from_json(const Json& j, const std::string& path = "code");

/// {"gammas", "gram", "self_dual"}.  The loader rebuilds the basis from the
/// elements alone and refuses files whose stored gram or flag disagrees.
Json basis_to_json(const Tower& tw, const ExtensionBasis& b);
ExtensionBasis basis_from_json(const Tower& tw, const Json& j, const std::string& path);

/// {"tower", "mrows", "ncols", "dim", "gen_rho"}
Json matrix_code_to_json(const MatrixCode& mc);
MatrixCode matrix_code_from_json(const Json& j, const std::string& path = "matrix_code");

// ---- one-way report writers (CLI and demo output) ----

Json standard_form_to_json(const StandardForm& sf);
Json reduction_to_json(const RankCode& input, const ReductionResult& r);
Json adjustment_to_json(const RankCode& input, const UnitAdjustment& a);
Json lcd_result_to_json(const RankCode& input, const LcdResult& r);
Json chain_report_to_json(const ChainReport& rep);
Json matrix_reduction_to_json(const RankCode& input, const ExtensionBasis& basis,
                              const MatrixReduction& mr);

// ---- files ----

/// Reads and parses a JSON file; ParseError with the file name on failure.
Json load_json_file(const std::string& file);
/// Writes pretty-printed JSON plus a trailing newline.
void save_json_file(const std::string& file, const Json& j);

} // namespace rmhull
