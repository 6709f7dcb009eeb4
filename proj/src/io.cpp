#include "pathlink/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pathlink {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line_no) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + tok + "'", line_no);
    }
}

}  // namespace

Design parse_design(std::istream& in) {
    std::string line;
    int line_no = 0;
    Design d;
    bool have_header = false;
    std::vector<Edge> host_edges;
    std::vector<Vertex> host_vertices;
    bool explicit_host = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            d.comments.push_back(line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1));
            continue;
        }
        auto toks = tokenize(line);
        if (toks.empty()) continue;

        if (!have_header) {
            if (toks[0] != "design" || toks.size() < 3)
                throw ParseError("expected 'design <shape> host=...'", line_no);
            d.shape = BlockShape::parse(toks[1]);
            if (toks[2].rfind("host=", 0) != 0)
                throw ParseError("expected host=<K n | K m n | edges>", line_no);
            std::string h = toks[2].substr(5);
            if (h == "K") {
                if (toks.size() == 4) {
                    d.host = HostDesc::complete(parse_int(toks[3], line_no));
                } else if (toks.size() == 5) {
                    d.host = HostDesc::bipartite(parse_int(toks[3], line_no),
                                                 parse_int(toks[4], line_no));
                } else {
                    throw ParseError("host=K needs one or two sizes", line_no);
                }
            } else if (h == "edges") {
                explicit_host = true;
            } else {
                throw ParseError("unknown host '" + h + "'", line_no);
            }
            have_header = true;
            continue;
        }

        if (toks[0] == "block") {
            std::vector<Vertex> vs;
            for (std::size_t i = 1; i < toks.size(); ++i) vs.push_back(parse_int(toks[i], line_no));
            try {
                d.blocks.emplace_back(d.shape, std::move(vs));
            } catch (const UsageError& e) {
                throw ParseError(e.what(), line_no);
            }
        } else if (toks[0] == "edge") {
            if (!explicit_host) throw ParseError("'edge' lines only allowed for host=edges", line_no);
            if (toks.size() != 3) throw ParseError("expected 'edge u v'", line_no);
            Vertex u = parse_int(toks[1], line_no);
            Vertex v = parse_int(toks[2], line_no);
            host_edges.push_back(make_edge(u, v));
            host_vertices.push_back(u);
            host_vertices.push_back(v);
        } else if (toks[0] == "vertex") {
            if (!explicit_host) throw ParseError("'vertex' lines only allowed for host=edges", line_no);
            for (std::size_t i = 1; i < toks.size(); ++i)
                host_vertices.push_back(parse_int(toks[i], line_no));
        } else {
            throw ParseError("unknown directive '" + toks[0] + "'", line_no);
        }
    }
    if (!have_header) throw ParseError("missing design header", 1);
    if (explicit_host) {
        for (const auto& b : d.blocks)
            for (Vertex v : b.vertices) host_vertices.push_back(v);
        d.host = HostDesc::from_graph(Graph::from_edges(std::move(host_vertices), std::move(host_edges)));
    }
    return d;
}

Design parse_design_text(const std::string& text) {
    std::istringstream is(text);
    return parse_design(is);
}

Design load_design(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open '" + file.string() + "'");
    return parse_design(in);
}

std::string serialize_design(const Design& d) {
    std::ostringstream os;
    os << "design " << d.shape.to_string() << " host=" << d.host.to_string() << "\n";
    for (const auto& c : d.comments) os << "# " << c << "\n";
    for (const auto& b : d.blocks) {
        os << "block";
        for (Vertex v : b.vertices) os << " " << v;
        os << "\n";
    }
    if (d.host.kind == HostDesc::Kind::Explicit) {
        const Graph& g = d.host.explicit_graph;
        std::set<Vertex> covered;
        for (const auto& [u, v] : g.edges) {
            covered.insert(u);
            covered.insert(v);
        }
        std::string isolated;
        for (Vertex v : g.vertices)
            if (!covered.count(v)) isolated += " " + std::to_string(v);
        if (!isolated.empty()) os << "vertex" << isolated << "\n";
        for (const auto& [u, v] : g.edges) os << "edge " << u << " " << v << "\n";
    }
    return os.str();
}

void save_design(const std::filesystem::path& file, const Design& d) {
    std::ofstream out(file);
    if (!out) throw UsageError("cannot write '" + file.string() + "'");
    out << serialize_design(d);
}

DownLink load_downlink(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open '" + file.string() + "'");
    std::string line;
    int line_no = 0;
    DownLink dl;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks[0] != "downlink" || toks.size() != 3)
                throw ParseError("expected 'downlink <domain-file> <codomain-file>'", line_no);
            auto base = file.parent_path();
            dl.domain = load_design(base / toks[1]);
            dl.codomain = load_design(base / toks[2]);
            have_header = true;
        } else if (toks[0] == "link") {
            if (toks.size() != 3) throw ParseError("expected 'link <i> <j>'", line_no);
            dl.map.emplace_back(parse_int(toks[1], line_no), parse_int(toks[2], line_no));
        } else {
            throw ParseError("unknown directive '" + toks[0] + "'", line_no);
        }
    }
    if (!have_header) throw ParseError("missing downlink header", 1);
    return dl;
}

std::string serialize_downlink(const std::string& domain_file, const std::string& codomain_file,
                               const std::vector<std::pair<int, int>>& map) {
    std::ostringstream os;
    os << "downlink " << domain_file << " " << codomain_file << "\n";
    for (const auto& [i, j] : map) os << "link " << i << " " << j << "\n";
    return os.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string checksum_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace pathlink
