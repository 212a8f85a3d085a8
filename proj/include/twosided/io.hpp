#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "twosided/intervals.hpp"
#include "twosided/layout.hpp"

namespace twosided {

struct parse_error : std::runtime_error {
    parse_error(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Graph text format: `n m`, then m lines `u v` with 1-based vertices, then an
/// optional `order: v1 ... vn` line. Blank lines and `#` comments are skipped.
layout_instance read_graph(std::istream &in);
void write_graph(std::ostream &out, const layout_instance &instance);

/// Interval dump: `id left right weight` per interval, then
/// `pair id1 id2 weight` per overlapping pair. Ids are 0-based and must
/// appear in order.
interval_set read_interval_dump(std::istream &in);
void write_interval_dump(std::ostream &out, const interval_set &set);

}  // namespace twosided
