#include "maxdicut/io.hpp"

#include <fstream>
#include <sstream>

namespace maxdicut {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

WeightedDigraph parse_digraph(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("instance: missing header line");
    long n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError("instance: header must be 'n m', got: " + line);
    }
    if (n < 0 || m < 0) throw ParseError("instance: negative header counts");

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        if (!next_content_line(in, line))
            throw ParseError("instance: expected " + std::to_string(m) + " arcs, got " +
                             std::to_string(i));
        std::istringstream as(line);
        long t = 0, h = 0;
        std::string wtext, extra;
        if (!(as >> t >> h >> wtext) || (as >> extra))
            throw ParseError("instance: arc line must be 'tail head weight', got: " + line);
        auto w = Rational::parse(wtext);
        if (!w) throw ParseError("instance: bad weight '" + wtext + "'");
        arcs.push_back(Arc{static_cast<int>(t), static_cast<int>(h), *w});
    }
    return make_digraph(static_cast<int>(n), std::move(arcs));
}

WeightedDigraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

WeightedDigraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    return parse_digraph(in);
}

void serialize_digraph(const WeightedDigraph& d, std::ostream& out) {
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs())
        out << a.tail << ' ' << a.head << ' ' << a.weight.str() << '\n';
}

std::string serialize_digraph(const WeightedDigraph& d) {
    std::ostringstream out;
    serialize_digraph(d, out);
    return out.str();
}

void save_digraph(const WeightedDigraph& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    serialize_digraph(d, out);
}

}  // namespace maxdicut
