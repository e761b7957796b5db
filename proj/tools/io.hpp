#pragma once

#include <string>

#include <json.hpp>

#include "hpcc/batch.hpp"
#include "hpcc/book_embedding.hpp"
#include "hpcc/decomposition.hpp"
#include "hpcc/dp_solver.hpp"
#include "hpcc/oracle.hpp"

namespace hpcc::io {

using nlohmann::json;

// {"left": [...], "right": [...], "s": name, "t": name, "edges": [[from, to], ...]}.
// Errors: ParseError.
GraphInput parse_graph(const std::string& text);
json graph_to_json(const OuterplanarStDigraph& g);

json decomposition_to_json(const OuterplanarStDigraph& g, const StPolygonDecomposition& d);
json solution_to_json(const OuterplanarStDigraph& g, const CompletionSolution& sol);
json oracle_to_json(const OuterplanarStDigraph& g, const OracleResult& r);
json compare_to_json(const std::vector<CompareResult>& results);

// {"spine": [...], "edges": [{"edge": [u, v], "segments": [{"page", "from", "to"}],
// "spine_crossings": [interval, ...]}]}. Crossing ranks are recovered from
// the segment coordinates. Errors: ParseError.
json embedding_to_json(const OuterplanarStDigraph& g, const BookEmbedding& be);
BookEmbedding parse_embedding(const OuterplanarStDigraph& g, const json& doc);

// Vertical spine, left-page arcs to the left, right-page arcs to the right,
// a tick at every spine crossing.
std::string render_svg(const OuterplanarStDigraph& g, const BookEmbedding& be);

}  // namespace hpcc::io
