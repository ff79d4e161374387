// Copyright 2026 The conid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conid/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "conid/channel.hpp"
#include "conid/combinatorics.hpp"
#include "conid/contextuality.hpp"
#include "conid/error.hpp"
#include "conid/graph.hpp"
#include "conid/identification.hpp"
#include "conid/io.hpp"
#include "conid/newman.hpp"
#include "conid/quantum.hpp"

namespace conid::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Row = std::vector<std::string>;

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char ch : text) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

// Display width in code points, enough for the few non-ASCII symbols we print.
std::size_t width(const std::string &s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

class Table {
   public:
    explicit Table(Row header) : header_(std::move(header)) {}

    void add(Row row) {
        rows_.push_back(std::move(row));
    }

    void markdown(std::ostream &out) const {
        std::vector<std::size_t> w(header_.size(), 3);
        for (std::size_t i = 0; i < header_.size(); ++i) {
            w[i] = std::max(w[i], width(header_[i]));
            for (const auto &r : rows_) {
                w[i] = std::max(w[i], width(r[i]));
            }
        }
        auto line = [&](const Row &r) {
            out << '|';
            for (std::size_t i = 0; i < r.size(); ++i) {
                out << ' ' << r[i] << std::string(w[i] - width(r[i]), ' ') << " |";
            }
            out << '\n';
        };
        line(header_);
        out << '|';
        for (auto n : w) {
            out << std::string(n + 2, '-') << '|';
        }
        out << '\n';
        for (const auto &r : rows_) {
            line(r);
        }
    }

    void csv(std::ostream &out) const {
        auto line = [&](const Row &r) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                out << (i ? "," : "") << csv_field(r[i]);
            }
            out << '\n';
        };
        line(header_);
        for (const auto &r : rows_) {
            line(r);
        }
    }

   private:
    Row header_;
    std::vector<Row> rows_;
};

class Report {
   public:
    explicit Report(std::ostream &out) : out_(out) {}

    void table(const std::string &title, const Table &t) {
        heading(title);
        t.markdown(out_);
    }

    void properties(const std::string &title, const std::vector<std::pair<std::string, std::string>> &items) {
        Table t({"property", "value"});
        for (const auto &[k, v] : items) {
            t.add({k, v});
        }
        table(title, t);
    }

    void csv(const std::string &title, const std::string &body) {
        heading(title);
        out_ << "```csv\n" << body << "```\n";
    }

    void json(const std::string &title, const Json &j) {
        heading(title);
        out_ << "```json\n" << j.dump() << "\n```\n";
    }

   private:
    void heading(const std::string &title) {
        if (!first_) {
            out_ << '\n';
        }
        first_ = false;
        out_ << "## " << title << "\n\n";
    }

    std::ostream &out_;
    bool first_ = true;
};

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string join(const std::vector<std::string> &items, const char *sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? sep : "") + items[i];
    }
    return out;
}

std::string set_of(const std::vector<std::string> &items) {
    return "{" + join(items) + "}";
}

std::vector<std::string> indices(const std::vector<std::size_t> &v) {
    std::vector<std::string> out;
    for (auto i : v) {
        out.push_back(std::to_string(i));
    }
    return out;
}

std::vector<std::string> labels_of(const std::vector<std::string> &names, const std::vector<std::size_t> &v) {
    std::vector<std::string> out;
    for (auto i : v) {
        out.push_back(names[i]);
    }
    return out;
}

std::string partition_text(const std::vector<std::string> &names, const std::vector<std::size_t> &color) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < color.size(); ++i) {
        parts.push_back(names[i] + ":" + color_name(color[i]));
    }
    return join(parts, " ");
}

std::vector<std::string> vertex_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

std::string diameter_text(const Graph &g) {
    auto d = diameter(g);
    return d ? std::to_string(*d) : "∞";
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h = (h ^ c) * 0x100000001b3ULL;
    }
    return h;
}

using Meta = std::vector<std::pair<std::string, std::string>>;

Json read_json(const std::string &path, Meta &meta, const std::string &role) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::string name = std::filesystem::path(path).filename().string();
    meta.emplace_back(role, "file " + name);
    meta.emplace_back(role + " digest", "fnv1a64:" + hex64(fnv1a(text)));
    return parse_json(text, name);
}

struct Options {
    std::string graph_file;
    std::string family;
    std::string builtin;
    std::string channel_file;
    std::string other;
    bool loops = false;
    unsigned power = 1;
    std::string kind = "strong";
    std::string coloring = "auto";
    std::size_t k = 0;
    std::string mode = "oracle";
    std::string vectors;
    std::string system;
    std::size_t d = 8;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::uint64_t node_budget = 50'000'000;
    std::string scheme_out;
    bool no_banner = false;
    bool no_graph = false;
    bool outcome_table = false;
};

void require_one_source(const std::vector<std::pair<const char *, bool>> &flags) {
    std::size_t given = 0;
    std::vector<std::string> names;
    for (const auto &[name, present] : flags) {
        given += present;
        names.push_back(name);
    }
    if (given != 1) {
        throw UsageError("exactly one of " + join(names) + " is required");
    }
}

bool looks_like_file(const std::string &s) {
    return s.ends_with(".json") || s.find('/') != std::string::npos;
}

Graph load_graph(const Options &o, Meta &meta) {
    require_one_source({{"--graph", !o.graph_file.empty()}, {"--family", !o.family.empty()}, {"--builtin", !o.builtin.empty()}});
    Graph g;
    if (!o.graph_file.empty()) {
        g = graph_from_json(read_json(o.graph_file, meta, "graph"));
    } else if (!o.family.empty()) {
        meta.emplace_back("graph", "family " + o.family);
        g = family_from_spec(o.family);
    } else {
        meta.emplace_back("graph", "builtin " + o.builtin);
        g = builtin_system(o.builtin).graph;
    }
    return o.loops ? g.with_self_loops(true) : g;
}

Channel load_channel(const Options &o, Meta &meta) {
    require_one_source({{"--channel", !o.channel_file.empty()}, {"--family", !o.family.empty()}, {"--builtin", !o.builtin.empty()}});
    Channel c = identity_channel(1);
    if (!o.channel_file.empty()) {
        c = channel_from_json(read_json(o.channel_file, meta, "channel"));
    } else if (!o.family.empty()) {
        meta.emplace_back("channel", "canonical channel of family " + o.family);
        c = canonical_channel(family_from_spec(o.family).with_self_loops(true));
    } else {
        meta.emplace_back("channel", "canonical channel of builtin " + o.builtin);
        c = canonical_channel(builtin_system(o.builtin).graph.with_self_loops(true));
    }
    if (o.power > 1) {
        meta.emplace_back("power", std::to_string(o.power));
        c = conormal_channel(c, o.power);
    }
    return c;
}

struct LoadedSystem {
    VectorSystem system;
    std::optional<Graph> companion;
};

LoadedSystem load_system(const std::string &spec, Meta &meta, bool require_contexts) {
    if (looks_like_file(spec)) {
        return {vector_system_from_json(read_json(spec, meta, "vectors"), require_contexts), std::nullopt};
    }
    meta.emplace_back("vectors", "builtin " + spec);
    auto b = builtin_system(spec);
    return {std::move(b.system), std::move(b.graph)};
}

Coloring load_coloring(const Options &o, const Channel &c, Meta &meta) {
    if (o.coloring == "auto") {
        meta.emplace_back("coloring", "auto (exact chromatic)");
        return chromatic_number(support_graph(c), {o.node_budget}).witness;
    }
    return coloring_from_json(read_json(o.coloring, meta, "coloring"), c);
}

void banner(const Options &o, std::ostream &out) {
    if (!o.no_banner) {
        out << "conid " << kVersion << "\n\n";
    }
}

// ---------------------------------------------------------------- graph

void graph_analyze(const Options &o, std::ostream &out) {
    Meta meta;
    const Graph g = load_graph(o, meta);
    const SearchLimits limits{o.node_budget};
    const auto names = vertex_names(g.vertex_count());
    auto alpha = independence_number(g, limits);
    auto omega = clique_number(g, limits);
    auto chi = chromatic_number(g, limits);
    std::string chi_f;
    try {
        chi_f = to_string(fractional_chromatic(g).value);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::too_large) {
            throw;
        }
        chi_f = "not computed (too large)";
    }
    Report r(out);
    r.properties("Input", meta);
    r.properties("Graph", {{"vertices", std::to_string(g.vertex_count())},
                           {"edges", std::to_string(g.edge_count())},
                           {"self loops", yes_no(g.has_self_loops())},
                           {"connected", yes_no(is_connected(g))},
                           {"diameter", diameter_text(g)},
                           {"alpha", std::to_string(alpha.size())},
                           {"alpha witness", set_of(indices(alpha.vertices))},
                           {"omega", std::to_string(omega.size())},
                           {"omega witness", set_of(indices(omega.vertices))},
                           {"chi", std::to_string(chi.chromatic)},
                           {"chi coloring", partition_text(names, chi.witness.color)},
                           {"chi_f", chi_f}});
}

void graph_family(const Options &o, std::ostream &out) {
    Meta meta;
    out << graph_to_json(load_graph(o, meta)).dump() << '\n';
}

void graph_product(const Options &o, std::ostream &out) {
    Meta meta;
    const Graph left = load_graph(o, meta);
    Graph right = left;
    if (!o.other.empty()) {
        right = looks_like_file(o.other) ? graph_from_json(read_json(o.other, meta, "other"))
                                         : family_from_spec(o.other);
        if (o.loops) {
            right = right.with_self_loops(true);
        }
    }
    const Graph p = o.kind == "strong" ? strong_product(left, right) : conormal_product(left, right);
    out << graph_to_json(p).dump() << '\n';
}

// -------------------------------------------------------------- channel

void channel_analyze(const Options &o, std::ostream &out) {
    Meta meta;
    const Channel c = load_channel(o, meta);
    Report r(out);
    r.properties("Input", meta);
    r.properties("Channel", {{"inputs", std::to_string(c.input_count())}, {"outputs", std::to_string(c.output_count())}});

    const SnfcReport snfc = validate_snfc(c);
    std::vector<std::string> pairs;
    for (const auto &[a, b] : snfc.asymmetric_pairs) {
        pairs.push_back("(" + a + "," + b + ")");
    }
    r.properties("SNFC", {{"xy-equivalent", yes_no(snfc.xy_equivalent)},
                          {"asymmetric pairs", pairs.empty() ? "none" : join(pairs, " ")},
                          {"fully corrupted", snfc.fully_corrupted.empty() ? "none" : set_of(snfc.fully_corrupted)},
                          {"SNFC", yes_no(snfc.passes())}});

    std::vector<std::pair<std::string, std::string>> indices_table;
    std::optional<IdentifiedSet> unassisted;
    if (snfc.xy_equivalent) {
        unassisted = ci_unassisted(c);
        indices_table.emplace_back("ci unassisted", std::to_string(unassisted->count));
        indices_table.emplace_back("identifiable inputs", set_of(labels_of(c.inputs(), unassisted->inputs)));
    }
    if (snfc.passes()) {
        const Graph support = support_graph(c);
        const Graph conf = confusability_graph(c);
        const std::size_t n = c.input_count();
        r.properties("Graphs", {{"support edges", std::to_string(support.edge_count())},
                                {"support diameter", diameter_text(support)},
                                {"confusability edges", std::to_string(conf.edge_count())},
                                {"confusability complete", yes_no(conf.edge_count() == n * (n - 1) / 2)}});
        auto zero = zero_error_index(c);
        indices_table.emplace_back("zero-error index alpha", std::to_string(zero.alpha));
        indices_table.emplace_back("zero-error code", set_of(labels_of(c.inputs(), zero.code)));
        indices_table.emplace_back("zero-error bits", fixed(zero.bits()));
        auto assist = min_classical_assistance(c);
        indices_table.emplace_back("chi (minimal assistance)", std::to_string(assist.chromatic));
        indices_table.emplace_back("coloring", partition_text(c.inputs(), assist.coloring.color));
        indices_table.emplace_back("partition oracle", assist.oracle ? std::to_string(*assist.oracle)
                                                                     : "skipped (more than " +
                                                                           std::to_string(kPartitionGuard) + " inputs)");
        indices_table.emplace_back("superactivation gap",
                                   unassisted->count == 0 ? std::to_string(superactivation_gap(c)) : "n/a (ci > 0)");
    }
    if (!indices_table.empty()) {
        r.properties("Indices", indices_table);
    }
}

// ------------------------------------------------------------------- ci

void ci_scheme(const Options &o, std::ostream &out) {
    Meta meta;
    const Channel c = load_channel(o, meta);
    const Coloring col = load_coloring(o, c, meta);
    const IdentificationScheme s = scheme_from_coloring(c, col);
    const SchemeReport rep = verify_scheme(c, s);

    Table t({"input", "output", "side symbol", "verdict", "identified"});
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        const std::size_t k = s.partition[x];
        for (auto y : output_range(c, x)) {
            const auto &v = s.decision[y][k];
            t.add({c.inputs()[x], c.outputs()[y], color_name(k), v ? c.inputs()[*v] : "inconclusive",
                   yes_no(v && *v == x)});
        }
    }
    Report r(out);
    r.properties("Input", meta);
    r.table("Scheme", t);
    r.properties("Summary", {{"classes", std::to_string(s.class_count)},
                             {"partition", partition_text(c.inputs(), s.partition)},
                             {"identified inputs", std::to_string(rep.identified_count) + " of " +
                                                       std::to_string(c.input_count())},
                             {"false accepts", std::to_string(rep.false_accepts.size())}});
    std::ostringstream csv;
    t.csv(csv);
    r.csv("Scheme CSV", csv.str());
    if (!o.scheme_out.empty()) {
        std::ofstream f(o.scheme_out, std::ios::binary);
        if (!f) {
            throw Error(ErrorCode::invalid_parameter, "cannot write '" + o.scheme_out + "'");
        }
        f << scheme_to_json(s, c).dump(2) << '\n';
    }
}

void ci_assisted(const Options &o, std::ostream &out) {
    Meta meta;
    const Channel c = load_channel(o, meta);
    Report r(out);
    r.properties("Input", meta);
    if (o.mode == "oracle") {
        auto res = assisted_ci(c, o.k);
        r.properties("Assisted identification (partition search)",
                     {{"side symbols", std::to_string(o.k)},
                      {"identified", std::to_string(res.identified) + " of " + std::to_string(c.input_count())},
                      {"partition", partition_text(c.inputs(), res.partition)},
                      {"partitions examined", std::to_string(res.partitions_examined)}});
    } else {
        const Graph support = support_graph(c);
        auto chi = chromatic_number(support, {o.node_budget});
        const bool full = o.k >= chi.chromatic;
        r.properties("Assisted identification (coloring)",
                     {{"side symbols", std::to_string(o.k)},
                      {"chi", std::to_string(chi.chromatic)},
                      {"coloring", partition_text(c.inputs(), chi.witness.color)},
                      {"full identification", yes_no(full)},
                      {"identified", full ? std::to_string(c.input_count()) + " of " + std::to_string(c.input_count())
                                          : "fewer than " + std::to_string(c.input_count())}});
    }
}

// -------------------------------------------------------------- quantum

Graph companion_graph(const Options &o, const LoadedSystem &ls, Meta &meta) {
    if (!o.graph_file.empty() || !o.family.empty() || !o.builtin.empty()) {
        return load_graph(o, meta);
    }
    return ls.companion ? *ls.companion : orthogonality_graph(ls.system);
}

void quantum_verify(const Options &o, std::ostream &out) {
    Meta meta;
    const LoadedSystem ls = load_system(o.vectors, meta, false);
    const Graph g = companion_graph(o, ls, meta);
    const VectorSystem &vs = ls.system;
    auto check = is_orthogonal_representation(vs, g);

    Report r(out);
    r.properties("Input", meta);
    r.properties("Representation", {{"vectors", std::to_string(vs.size())},
                                    {"dimension", std::to_string(vs.dim)},
                                    {"graph edges", std::to_string(g.edge_count())},
                                    {"orthogonal representation", yes_no(check.ok)},
                                    {"violations", std::to_string(check.violations.size())}});
    if (!check.ok) {
        Table t({"u", "v", "inner product"});
        for (const auto &v : check.violations) {
            t.add({vs.label(v.edge.first), vs.label(v.edge.second), to_string(v.inner)});
        }
        r.table("Violations", t);
        throw Error(ErrorCode::not_a_representation, std::to_string(check.violations.size()) + " edges are not orthogonal");
    }
    const RankCertificate cert = certify_orthogonal_rank(g, vs);
    const auto chi = chromatic_number(g, {o.node_budget});
    r.properties("Orthogonal rank", {{"lower (omega)", std::to_string(cert.lower)},
                                     {"upper (dimension)", std::to_string(cert.upper)},
                                     {"tight", yes_no(cert.tight)},
                                     {"chi", std::to_string(chi.chromatic)},
                                     {"QA ratio chi/dim", to_string(ratio(static_cast<unsigned long>(chi.chromatic),
                                                                          static_cast<unsigned long>(cert.upper)))}});

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        labels.push_back(vs.label(i));
    }
    const Channel c = canonical_channel(g.with_self_loops(true), labels);
    const auto q = quantum_assisted_ci(c, vs);
    std::size_t zero_edges = 0, edge_entries = 0;
    for (const auto &e : q.table) {
        if (e.input != e.output) {
            ++edge_entries;
            zero_edges += sgn(e.yes_probability) == 0;
        }
    }
    r.properties("Quantum-assisted identification",
                 {{"identified", std::to_string(q.identified) + " of " + std::to_string(c.input_count())},
                  {"zero YES probability on support edges", std::to_string(zero_edges) + " of " + std::to_string(edge_entries)}});
    if (o.outcome_table) {
        Table t({"input", "output", "P(YES)"});
        for (const auto &e : q.table) {
            t.add({c.inputs()[e.input], c.outputs()[e.output], to_string(e.yes_probability)});
        }
        r.table("Outcomes", t);
    }
}

void quantum_scaling(const Options &o, std::ostream &out) {
    Meta meta;
    const LoadedSystem ls = load_system(o.vectors, meta, false);
    const Graph g = companion_graph(o, ls, meta);
    meta.emplace_back("exponents", "1.." + std::to_string(o.power));
    auto reports = qa_scaling_report(g, o.power, ls.system, {o.node_budget, 1024});
    Table t({"m", "vertices", "chi", "chi_f", "xi lower", "xi upper", "chi/xi upper", "chi_f/xi upper"});
    for (const auto &q : reports) {
        t.add({std::to_string(q.exponent), std::to_string(q.vertex_count),
               (q.chi_exact ? "" : ">= ") + std::to_string(q.chi),
               q.chi_fractional ? to_string(*q.chi_fractional) + (q.chi_fractional_direct ? "" : " (product)") : "n/a",
               std::to_string(q.xi.lower), std::to_string(q.xi.upper), to_string(q.qa_ratio),
               q.qa_lower_bound ? to_string(*q.qa_lower_bound) : "n/a"});
    }
    Report r(out);
    r.properties("Input", meta);
    r.table("Scaling", t);
}

// ------------------------------------------------------------------- ks

void ks_check(const Options &o, std::ostream &out) {
    Meta meta;
    const LoadedSystem ls = load_system(o.system, meta, true);
    const KSSystem sys(ls.system);
    const Graph orth = orthogonality_graph(sys);
    const Graph ctx = context_clique_graph(sys);
    std::size_t dmin = SIZE_MAX, dmax = 0;
    for (Vertex v = 0; v < orth.vertex_count(); ++v) {
        dmin = std::min(dmin, orth.degree(v));
        dmax = std::max(dmax, orth.degree(v));
    }
    const SearchLimits limits{o.node_budget};
    const auto coloring = ks_colorable(sys);
    std::vector<std::string> ones;
    for (std::size_t i = 0; i < coloring.assignment.size(); ++i) {
        if (coloring.assignment[i]) {
            ones.push_back(sys.system().label(i));
        }
    }
    const bool proper_subgraph = ctx.edge_count() < orth.edge_count();

    Report r(out);
    r.properties("Input", meta);
    r.properties("KS system", {{"vectors", std::to_string(sys.system().size())},
                               {"dimension", std::to_string(sys.system().dim)},
                               {"contexts", std::to_string(sys.contexts().size())}});
    r.properties("Graphs", {{"orthogonality edges", std::to_string(orth.edge_count())},
                            {"degree range", std::to_string(dmin) + ".." + std::to_string(dmax)},
                            {"orthogonality diameter", diameter_text(orth)},
                            {"orthogonality chi", std::to_string(chromatic_number(orth, limits).chromatic)},
                            {"context-clique edges", std::to_string(ctx.edge_count())},
                            {"context-clique chi", std::to_string(chromatic_number(ctx, limits).chromatic)},
                            {"context-clique is proper subgraph", yes_no(proper_subgraph)}});
    r.properties("Colorability",
                 {{"{0,1}-coloring", coloring.colorable ? "found" : "none"},
                  {"search nodes", std::to_string(coloring.nodes)},
                  {"vectors assigned 1", coloring.colorable ? set_of(ones) : "-"},
                  {"parity obstruction", yes_no(parity_obstruction(sys))}});
}

// --------------------------------------------------------------- newman

void newman(const Options &o, std::ostream &out) {
    const NewmanReport n = newman_qa_bound(o.d);
    const Graph g = newman_graph(o.d);
    Report r(out);
    r.properties("Newman graph", {{"d", std::to_string(n.d)},
                                  {"vertices", std::to_string(g.vertex_count())},
                                  {"edges", std::to_string(g.edge_count())},
                                  {"degree", std::to_string(g.vertex_count() ? g.degree(0) : 0)},
                                  {"diameter", n.diameter ? std::to_string(*n.diameter) : "∞"}});
    Table t({"quantity", "value"});
    t.add({"alpha", std::to_string(n.alpha)});
    t.add({"alpha search nodes", std::to_string(n.alpha_nodes)});
    t.add({"alpha cap floor(1.99^d/4)", std::to_string(n.alpha_cap)});
    t.add({"alpha within cap", yes_no(n.alpha <= n.alpha_cap)});
    t.add({"chi lower bound ceil(vertices/alpha)", std::to_string(n.qa.chi)});
    t.add({"xi certificate", std::to_string(n.qa.xi.lower) + ", " + std::to_string(n.qa.xi.upper) +
                                 (n.qa.xi.tight ? ", tight" : ", open")});
    t.add({"QA lower bound", to_string(*n.qa.qa_lower_bound)});
    t.add({"target (1/d)(2/1.99)^d", to_string(n.target)});
    t.add({"bound holds", yes_no(n.bound_holds)});
    r.table("QA report", t);
    if (!o.no_graph) {
        r.json("Graph JSON", graph_to_json(g));
    }
}

// ------------------------------------------------------------- simulate

void simulate(const Options &o, std::ostream &out) {
    Meta meta;
    const Channel c = load_channel(o, meta);
    const Coloring col = load_coloring(o, c, meta);
    const IdentificationScheme s = scheme_from_coloring(c, col);
    const SimulationReport rep = simulate_protocol(c, s, {o.trials, o.seed, o.workers});

    Table t({"input", "trials", "conclusive", "inconclusive", "false accepts", "observed rate", "expected rate",
             "within 3 sigma"});
    for (const auto &st : rep.inputs) {
        const double p = st.expected_conclusive_rate.get_d();
        const double n = static_cast<double>(st.trials);
        const double observed = n > 0 ? static_cast<double>(st.conclusive) / n : 0.0;
        const double sigma = n > 0 ? std::sqrt(p * (1 - p) / n) : 0.0;
        t.add({c.inputs()[st.input], std::to_string(st.trials), std::to_string(st.conclusive),
               std::to_string(st.inconclusive), std::to_string(st.false_accepts), fixed(observed),
               to_string(st.expected_conclusive_rate), yes_no(std::abs(observed - p) <= 3 * sigma + 1e-12)});
    }
    meta.emplace_back("trials", std::to_string(o.trials));
    meta.emplace_back("seed", std::to_string(o.seed));
    Report r(out);
    r.properties("Input", meta);
    r.table("Simulation", t);
    r.properties("Summary", {{"false accepts", std::to_string(rep.total_false_accepts())}});
    r.csv("Simulation CSV", rep.to_csv(c));
}

void add_graph_source(CLI::App *cmd, Options &o) {
    cmd->add_option("--graph", o.graph_file, "Graph JSON file");
    cmd->add_option("--family", o.family, "Named family, e.g. wheel:7, turan:6,2, pentagon:1");
    cmd->add_option("--builtin", o.builtin, "Companion graph of a built-in vector system");
    cmd->add_flag("--loops", o.loops, "Set the self-loop flag on the loaded graph");
}

void add_channel_source(CLI::App *cmd, Options &o) {
    cmd->add_option("--channel", o.channel_file, "Channel JSON file");
    cmd->add_option("--family", o.family, "Canonical channel of a named graph family");
    cmd->add_option("--builtin", o.builtin, "Canonical channel of a built-in companion graph");
    cmd->add_option("--power", o.power, "Co-normal power of the channel")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Conclusive identification over classical channels", "conid"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--no-banner", o.no_banner, "Omit the version banner");
    app.add_option("--node-budget", o.node_budget, "Node budget for exact searches (0 = unlimited)");

    auto *graph = app.add_subcommand("graph", "Graph analysis and construction")->require_subcommand(1);
    auto *g_analyze = graph->add_subcommand("analyze", "Diameter, alpha, omega, chi and chi_f");
    add_graph_source(g_analyze, o);
    auto *g_family = graph->add_subcommand("family", "Emit a graph as JSON");
    add_graph_source(g_family, o);
    auto *g_product = graph->add_subcommand("product", "Strong or co-normal product as JSON");
    add_graph_source(g_product, o);
    g_product->add_option("--kind", o.kind, "strong or conormal")->check(CLI::IsMember({"strong", "conormal"}));
    g_product->add_option("--other", o.other, "Right factor: family spec or JSON file (default: square)");

    auto *channel = app.add_subcommand("channel", "Channel analysis")->require_subcommand(1);
    auto *c_analyze = channel->add_subcommand("analyze", "SNFC report, graphs and identification indices");
    add_channel_source(c_analyze, o);

    auto *ci = app.add_subcommand("ci", "Classically assisted identification")->require_subcommand(1);
    auto *ci_s = ci->add_subcommand("scheme", "Decision table from a coloring of the support graph");
    add_channel_source(ci_s, o);
    ci_s->add_option("--coloring", o.coloring, "auto, or a JSON file mapping input labels to colors");
    ci_s->add_option("--scheme-out", o.scheme_out, "Write the scheme JSON to this file");
    auto *ci_a = ci->add_subcommand("assisted", "Identified inputs with a k-symbol side channel");
    add_channel_source(ci_a, o);
    ci_a->add_option("--k", o.k, "Side-channel alphabet size")->required()->check(CLI::PositiveNumber);
    ci_a->add_option("--mode", o.mode, "oracle or coloring")->check(CLI::IsMember({"oracle", "coloring"}));

    auto *quantum = app.add_subcommand("quantum", "Quantum-assisted identification")->require_subcommand(1);
    auto *q_verify = quantum->add_subcommand("verify", "Check an orthogonal representation and run the protocol");
    q_verify->add_option("--vectors", o.vectors, "Built-in name or vector-system JSON file")->required();
    add_graph_source(q_verify, o);
    q_verify->add_flag("--table", o.outcome_table, "Print the per-pair outcome table");
    auto *q_scaling = quantum->add_subcommand("scaling", "QA reports for co-normal powers");
    q_scaling->add_option("--vectors", o.vectors, "Built-in name or vector-system JSON file")->required();
    add_graph_source(q_scaling, o);
    q_scaling->add_option("--power", o.power, "Largest exponent")->check(CLI::PositiveNumber);

    auto *ks = app.add_subcommand("ks", "Kochen-Specker systems")->require_subcommand(1);
    auto *ks_c = ks->add_subcommand("check", "Colorability, parity and graph statistics");
    ks_c->add_option("--system", o.system, "Built-in name or vector-system JSON file with contexts")->required();

    auto *nm = app.add_subcommand("newman", "Newman graph QA bound");
    nm->add_option("--d", o.d, "Vector length, a multiple of 4");
    nm->add_flag("--no-graph", o.no_graph, "Omit the graph JSON block");

    auto *sim = app.add_subcommand("simulate", "Monte-Carlo run of the assisted protocol");
    add_channel_source(sim, o);
    sim->add_option("--coloring", o.coloring, "auto, or a JSON file mapping input labels to colors");
    sim->add_option("--trials", o.trials, "Number of trials");
    sim->add_option("--seed", o.seed, "64-bit seed");
    sim->add_option("--workers", o.workers, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    std::ostringstream buffer;
    try {
        if (g_analyze->parsed()) {
            graph_analyze(o, buffer);
        } else if (g_family->parsed()) {
            graph_family(o, buffer);
        } else if (g_product->parsed()) {
            graph_product(o, buffer);
        } else if (c_analyze->parsed()) {
            channel_analyze(o, buffer);
        } else if (ci_s->parsed()) {
            ci_scheme(o, buffer);
        } else if (ci_a->parsed()) {
            ci_assisted(o, buffer);
        } else if (q_verify->parsed()) {
            quantum_verify(o, buffer);
        } else if (q_scaling->parsed()) {
            quantum_scaling(o, buffer);
        } else if (ks_c->parsed()) {
            ks_check(o, buffer);
        } else if (nm->parsed()) {
            newman(o, buffer);
        } else if (sim->parsed()) {
            simulate(o, buffer);
        }
        const bool json_only = g_family->parsed() || g_product->parsed();
        if (!json_only) {
            banner(o, out);
        }
        out << buffer.str();
        return 0;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        // Sections finished before the failure are still useful (e.g. violation lists).
        if (!buffer.str().empty()) {
            banner(o, out);
            out << buffer.str();
        }
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace conid::cli
