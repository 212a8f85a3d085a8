#include "twosided/io.hpp"

#include <sstream>
#include <vector>

namespace twosided {

namespace {

struct line_reader {
    std::istream &in;
    int number = 0;

    // Next non-blank line with comments stripped; false at end of input.
    bool next(std::string &line) {
        while (std::getline(in, line)) {
            ++number;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    }
};

template <typename... T>
void parse_fields(const std::string &line, int number, T &...fields) {
    std::istringstream ss(line);
    ((ss >> fields) && ...);
    if (!ss) throw parse_error(number, "expected " + std::to_string(sizeof...(T)) + " fields: '" + line + "'");
    std::string rest;
    if (ss >> rest) throw parse_error(number, "trailing text '" + rest + "'");
}

}  // namespace

layout_instance read_graph(std::istream &in) {
    line_reader reader{in};
    std::string line;
    if (!reader.next(line)) throw parse_error(reader.number, "missing header 'n m'");
    long long n = 0, m = 0;
    parse_fields(line, reader.number, n, m);
    if (n < 0 || m < 0 || n > 1'000'000 || m > 10'000'000) throw parse_error(reader.number, "bad header counts");

    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line)) throw parse_error(reader.number, "expected " + std::to_string(m) + " edges");
        long long u = 0, v = 0;
        parse_fields(line, reader.number, u, v);
        if (u < 1 || u > n || v < 1 || v > n) throw parse_error(reader.number, "vertex out of range 1.." + std::to_string(n));
        edges.push_back({static_cast<vertex_id>(u - 1), static_cast<vertex_id>(v - 1)});
    }

    std::vector<vertex_id> order;
    bool has_order = false;
    if (reader.next(line)) {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag != "order:") throw parse_error(reader.number, "expected 'order:' line, got '" + tag + "'");
        long long v = 0;
        while (ss >> v) {
            if (v < 1 || v > n) throw parse_error(reader.number, "order vertex out of range");
            order.push_back(static_cast<vertex_id>(v - 1));
        }
        if (!ss.eof()) throw parse_error(reader.number, "non-numeric entry in order");
        has_order = true;
        if (reader.next(line)) throw parse_error(reader.number, "unexpected text after order line");
    }

    try {
        if (has_order) return {static_cast<int>(n), std::move(edges), std::move(order)};
        return {static_cast<int>(n), std::move(edges)};
    } catch (const std::invalid_argument &e) {
        throw parse_error(reader.number, e.what());
    }
}

void write_graph(std::ostream &out, const layout_instance &instance) {
    out << instance.vertex_count() << ' ' << instance.edge_count() << '\n';
    for (const edge &e : instance.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
    out << "order:";
    for (vertex_id v : instance.order()) out << ' ' << v + 1;
    out << '\n';
}

interval_set read_interval_dump(std::istream &in) {
    line_reader reader{in};
    std::string line;
    std::vector<interval> intervals;
    std::vector<pair_weight> pairs;
    while (reader.next(line)) {
        std::istringstream probe(line);
        std::string head;
        probe >> head;
        if (head == "pair") {
            std::string tag;
            long long a = 0, b = 0, w = 0;
            parse_fields(line, reader.number, tag, a, b, w);
            pairs.push_back({static_cast<interval_id>(a), static_cast<interval_id>(b), w});
        } else {
            if (!pairs.empty()) throw parse_error(reader.number, "interval line after pair lines");
            long long id = 0, l = 0, r = 0, w = 0;
            parse_fields(line, reader.number, id, l, r, w);
            if (id != static_cast<long long>(intervals.size()))
                throw parse_error(reader.number, "expected interval id " + std::to_string(intervals.size()));
            intervals.push_back({static_cast<int>(l), static_cast<int>(r), w, -1});
        }
    }
    try {
        return {std::move(intervals), std::move(pairs)};
    } catch (const std::invalid_argument &e) {
        throw parse_error(reader.number, e.what());
    }
}

void write_interval_dump(std::ostream &out, const interval_set &set) {
    for (interval_id i = 0; i < set.size(); ++i) {
        const interval &iv = set.at(i);
        out << i << ' ' << iv.left << ' ' << iv.right << ' ' << iv.weight << '\n';
    }
    for (const pair_weight &p : set.pairs()) out << "pair " << p.a << ' ' << p.b << ' ' << p.weight << '\n';
}

}  // namespace twosided
