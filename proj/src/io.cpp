#include "kshell/io.hpp"

#include <fstream>
#include <sstream>

namespace kshell {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ss(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw InputError(name + ":" + std::to_string(line) + ": " + msg);
}

// Labels in first-appearance order, starting from the declared header.
struct LabelCollector {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    bool declared = false;

    void declare(const std::vector<std::string>& header) {
        declared = true;
        for (const auto& l : header) add(l);
    }
    int add(const std::string& l) {
        auto it = index.find(l);
        if (it != index.end()) return it->second;
        index.emplace(l, static_cast<int>(labels.size()));
        labels.push_back(l);
        return static_cast<int>(labels.size()) - 1;
    }
    int lookup(const std::string& name, int line, const std::string& l) {
        auto it = index.find(l);
        if (it == index.end()) {
            if (declared) fail(name, line, "unknown vertex '" + l + "'");
            return add(l);
        }
        return it->second;
    }
};

bool is_header(const Line& l, const char* key) { return l.tokens.front() == key; }

}  // namespace

Complex parse_complex(std::istream& in, const std::string& name) {
    std::vector<Line> lines = tokenize(in);
    LabelCollector labels;
    std::vector<std::vector<std::string>> raw_faces;
    bool first = true;
    for (const Line& l : lines) {
        if (first && is_header(l, "vertices:")) {
            labels.declare({l.tokens.begin() + 1, l.tokens.end()});
            first = false;
            continue;
        }
        first = false;
        std::vector<std::string> face;
        for (const std::string& t : l.tokens) {
            if (t == "{}") continue;  // the empty facet
            labels.lookup(name, l.number, t);
            face.push_back(t);
        }
        raw_faces.push_back(std::move(face));
    }
    try {
        return Complex::normalize_labels(labels.labels, raw_faces);
    } catch (const InputError& e) {
        throw InputError(name + ": " + e.what());
    }
}

Complex parse_complex_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return parse_complex(in, name);
}

std::string emit_complex(const Complex& c) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& l : c.universe().labels()) out << ' ' << l;
    out << '\n';
    for (Face f : c.facets()) {
        if (f == 0) {
            out << "{}\n";
            continue;
        }
        bool head = true;
        for (const auto& l : c.labels_of(f)) {
            if (!head) out << ' ';
            out << l;
            head = false;
        }
        out << '\n';
    }
    return out.str();
}

Graph parse_graph(std::istream& in, const std::string& name) {
    std::vector<Line> lines = tokenize(in);
    LabelCollector labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> lineno;
    bool first = true;
    for (const Line& l : lines) {
        if (first && is_header(l, "vertices:")) {
            labels.declare({l.tokens.begin() + 1, l.tokens.end()});
            first = false;
            continue;
        }
        first = false;
        if (l.tokens.size() != 2) fail(name, l.number, "an edge line needs exactly two vertices");
        int u = labels.lookup(name, l.number, l.tokens[0]);
        int v = labels.lookup(name, l.number, l.tokens[1]);
        edges.emplace_back(u, v);
        lineno.push_back(l.number);
    }
    try {
        Graph g{Universe(labels.labels)};
        for (std::size_t i = 0; i < edges.size(); ++i) {
            try {
                g.add_edge(edges[i].first, edges[i].second);
            } catch (const InputError& e) {
                fail(name, lineno[i], e.what());
            }
        }
        return g;
    } catch (const InputError& e) {
        throw InputError(name + ": " + e.what());
    }
}

Graph parse_graph_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return parse_graph(in, name);
}

std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& l : g.vertices().labels()) out << ' ' << l;
    out << '\n';
    for (auto [u, v] : g.edges())
        out << g.vertices().label(u) << ' ' << g.vertices().label(v) << '\n';
    return out.str();
}

MonomialIdeal parse_ideal(std::istream& in, const std::string& name) {
    std::vector<Line> lines = tokenize(in);
    LabelCollector labels;
    struct RawGen {
        int line;
        std::vector<std::pair<std::string, int>> factors;
        bool unit = false;
    };
    std::vector<RawGen> raw;
    bool first = true;
    for (const Line& l : lines) {
        if (first && is_header(l, "vars:")) {
            labels.declare({l.tokens.begin() + 1, l.tokens.end()});
            first = false;
            continue;
        }
        first = false;
        RawGen gen;
        gen.line = l.number;
        for (const std::string& t : l.tokens) {
            if (t == "1") {
                gen.unit = true;
                continue;
            }
            std::size_t caret = t.find('^');
            std::string var = t.substr(0, caret);
            int exp = 1;
            if (caret != std::string::npos) {
                try {
                    exp = std::stoi(t.substr(caret + 1));
                } catch (...) {
                    fail(name, l.number, "bad exponent in '" + t + "'");
                }
                if (exp < 1) fail(name, l.number, "exponents must be positive in '" + t + "'");
            }
            if (var.empty()) fail(name, l.number, "missing variable in '" + t + "'");
            labels.lookup(name, l.number, var);
            gen.factors.emplace_back(var, exp);
        }
        raw.push_back(std::move(gen));
    }
    try {
        Universe vars(labels.labels);
        std::vector<Monomial> gens;
        for (const RawGen& g : raw) {
            if (g.unit && g.factors.empty()) {
                gens.push_back(Monomial::one());
                continue;
            }
            std::vector<std::pair<int, int>> factors;
            std::unordered_map<int, int> merged;
            for (const auto& [var, exp] : g.factors) merged[vars.index_of(var)] += exp;
            for (const auto& [v, e] : merged) factors.emplace_back(v, e);
            gens.push_back(Monomial(std::move(factors)));
        }
        return MonomialIdeal(std::move(vars), std::move(gens));
    } catch (const InputError& e) {
        throw InputError(name + ": " + e.what());
    }
}

MonomialIdeal parse_ideal_text(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return parse_ideal(in, name);
}

std::string emit_ideal(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "vars:";
    for (const auto& l : ideal.variables().labels()) out << ' ' << l;
    out << '\n';
    for (const Monomial& g : ideal.generators())
        out << monomial_to_string(g, ideal.variables()) << '\n';
    return out.str();
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

}  // namespace

Complex load_complex(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_complex(in, path);
}

Graph load_graph(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_graph(in, path);
}

MonomialIdeal load_ideal(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_ideal(in, path);
}

}  // namespace kshell
