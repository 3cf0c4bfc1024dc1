#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monocross/coloring.hpp"
#include "monocross/geometry.hpp"
#include "monocross/halving.hpp"

namespace monocross {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number;
};

// Point text format: first value n, then n lines "x y" with integer or "p/q"
// coordinates; '#' starts a comment. Drawings parsed this way are complete.
Drawing read_point_text(const std::string& path);
Drawing parse_point_text(const std::string& text);
std::string format_point_text(const Drawing& d);
void write_point_text(const Drawing& d, const std::string& path);

// Coloring file: one line over {R, B}, one character per canonical edge.
Coloring read_coloring(const std::string& path, const Drawing& d);
void write_coloring(const Coloring& chi, const std::string& path);

// Matching file: one "u v" line per point, in point order; the edge {u, v}
// must be incident to the line's point.
HalvingMatching read_matching(const std::string& path, const Drawing& d);
void write_matching(const HalvingMatching& m, const Drawing& d, const std::string& path);

struct DbOptions {
    int n = 0;            // points per record
    int width = 2;        // bytes per coordinate, 1 or 2
    bool big_endian = false;
    bool permissive = false;  // skip degenerate records instead of throwing
};

struct DbRecord {
    int index = 0;
    std::optional<Drawing> drawing;  // empty when skipped under permissive
    std::string error;
};

// Binary order-type database: records of n points, unsigned x then y per
// point, fixed coordinate width. Record stride is 2*n*width bytes.
void read_order_type_db(const std::string& path, const DbOptions& opts,
                        const std::function<void(DbRecord&&)>& sink);
std::vector<Drawing> read_order_type_db(const std::string& path, const DbOptions& opts);
// Fixture writer; coordinates must be integers in [0, 2^(8*width)).
void write_order_type_db(const std::string& path, const std::vector<Drawing>& drawings,
                         const DbOptions& opts);

// Red/blue figure; pass nullptr to draw all edges gray.
void render_svg(const Drawing& d, const Coloring* chi, const std::string& path);

}  // namespace monocross
