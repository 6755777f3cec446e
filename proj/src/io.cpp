#include "stacklab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stacklab {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("parse error: " + msg);
}

// Yields non-empty, non-comment lines.
bool next_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

std::vector<std::int64_t> count_fields(std::istringstream& ss, std::size_t want,
                                        const std::string& what) {
    std::vector<std::int64_t> out;
    std::int64_t x;
    while (ss >> x) out.push_back(x);
    if (out.size() != want) fail(what + ": expected " + std::to_string(want) + " fields");
    return out;
}

}  // namespace

void write_graph(std::ostream& os, const Graph& g) {
    os << "graph " << g.vertex_count() << ' ' << g.edge_count();
    if (g.labeled()) os << ' ' << g.label_dim();
    os << '\n';
    if (g.labeled()) {
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            os << "v " << v;
            for (int d = 0; d < g.label_dim(); ++d)
                os << ' ' << g.label(v)[static_cast<std::size_t>(d)];
            os << '\n';
        }
    }
    for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& is) {
    std::string line;
    if (!next_line(is, line)) fail("empty graph input");
    std::istringstream hs(line);
    std::string tag;
    hs >> tag;
    if (tag != "graph") fail("expected 'graph' header");
    std::int64_t n, m, dim = 0;
    if (!(hs >> n >> m)) fail("graph header needs <n> <m>");
    if (!(hs >> dim)) dim = 0;
    if (dim < 0 || dim > 3) fail("graph dim must be 0..3");

    std::vector<Label> labels;
    if (dim > 0) labels.assign(static_cast<std::size_t>(n), Label{});
    std::vector<bool> labeled(static_cast<std::size_t>(n), false);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));

    while (next_line(is, line)) {
        std::istringstream ss(line);
        std::string kind;
        ss >> kind;
        if (kind == "v") {
            if (dim == 0) fail("label line in unlabeled graph");
            auto f = count_fields(ss, 1 + static_cast<std::size_t>(dim), "label line");
            std::int64_t id = f[0];
            if (id < 1 || id > n) fail("label vertex id out of range");
            if (labeled[static_cast<std::size_t>(id - 1)]) fail("duplicate label line");
            labeled[static_cast<std::size_t>(id - 1)] = true;
            Label l{};
            for (int d = 0; d < dim; ++d)
                l[static_cast<std::size_t>(d)] = static_cast<Vertex>(f[static_cast<std::size_t>(1 + d)]);
            labels[static_cast<std::size_t>(id - 1)] = l;
        } else if (kind == "e") {
            auto f = count_fields(ss, 2, "edge line");
            if (f[0] >= f[1]) fail("edge line must have u < v");
            edges.push_back({static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1])});
        } else {
            fail("unknown line kind '" + kind + "'");
        }
    }
    if (edges.size() != static_cast<std::size_t>(m)) fail("edge count mismatch with header");
    if (dim > 0)
        for (std::int64_t v = 0; v < n; ++v)
            if (!labeled[static_cast<std::size_t>(v)]) fail("missing label line for vertex");
    return Graph(static_cast<Vertex>(n), std::move(edges), static_cast<int>(dim),
                 std::move(labels));
}

namespace {

template <class LayoutT>
void write_layout(std::ostream& os, const char* tag, const Graph& g,
                  const LayoutT& l) {
    os << tag << ' ' << g.vertex_count() << ' ' << g.edge_count() << ' '
       << l.pages << '\n';
    os << "order";
    for (Vertex v : l.order.order()) os << ' ' << v;
    os << '\n';
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        os << "e " << g.edge(i).u << ' ' << g.edge(i).v << ' ' << l.page[i] << '\n';
}

template <class LayoutT>
LayoutT read_layout(std::istream& is, const char* tag, const Graph& g) {
    std::string line;
    if (!next_line(is, line)) fail("empty layout input");
    std::istringstream hs(line);
    std::string kind;
    hs >> kind;
    if (kind != tag) fail(std::string("expected '") + tag + "' header, got '" + kind + "'");
    std::int64_t n, m, pages;
    if (!(hs >> n >> m >> pages)) fail("layout header needs <n> <m> <pages>");
    if (n != g.vertex_count()) fail("layout vertex count differs from graph");
    if (m != static_cast<std::int64_t>(g.edge_count()))
        fail("layout edge count differs from graph");

    if (!next_line(is, line)) fail("missing order line");
    std::istringstream os_(line);
    os_ >> kind;
    if (kind != "order") fail("expected order line");
    std::vector<Vertex> order;
    std::int64_t x;
    while (os_ >> x) order.push_back(static_cast<Vertex>(x));
    if (order.size() != static_cast<std::size_t>(n)) fail("order line length mismatch");

    std::vector<std::int32_t> page(g.edge_count(), 0);
    std::size_t assigned = 0;
    while (next_line(is, line)) {
        std::istringstream ss(line);
        ss >> kind;
        if (kind != "e") fail("unknown layout line '" + kind + "'");
        auto f = count_fields(ss, 3, "layout edge line");
        auto idx = g.edge_index(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
        if (idx < 0)
            fail("layout names edge (" + std::to_string(f[0]) + "," +
                 std::to_string(f[1]) + ") not present in the graph");
        if (page[static_cast<std::size_t>(idx)] != 0)
            fail("duplicate assignment for edge (" + std::to_string(f[0]) + "," +
                 std::to_string(f[1]) + ")");
        page[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(f[2]);
        ++assigned;
    }
    if (assigned != g.edge_count()) {
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (page[i] == 0)
                fail("edge (" + std::to_string(g.edge(i).u) + "," +
                     std::to_string(g.edge(i).v) + ") is not assigned a page");
    }
    return LayoutT{VertexOrder(std::move(order)), std::move(page),
                   static_cast<std::int32_t>(pages)};
}

}  // namespace

void write_stack_layout(std::ostream& os, const Graph& g, const StackLayout& l) {
    write_layout(os, "stacklayout", g, l);
}

void write_queue_layout(std::ostream& os, const Graph& g, const QueueLayout& l) {
    write_layout(os, "queuelayout", g, l);
}

StackLayout read_stack_layout(std::istream& is, const Graph& g) {
    return read_layout<StackLayout>(is, "stacklayout", g);
}

QueueLayout read_queue_layout(std::istream& is, const Graph& g) {
    return read_layout<QueueLayout>(is, "queuelayout", g);
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

Graph graph_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

std::string stack_layout_to_string(const Graph& g, const StackLayout& l) {
    std::ostringstream os;
    write_stack_layout(os, g, l);
    return os.str();
}

StackLayout stack_layout_from_string(const std::string& text, const Graph& g) {
    std::istringstream is(text);
    return read_stack_layout(is, g);
}

std::string queue_layout_to_string(const Graph& g, const QueueLayout& l) {
    std::ostringstream os;
    write_queue_layout(os, g, l);
    return os.str();
}

QueueLayout queue_layout_from_string(const std::string& text, const Graph& g) {
    std::istringstream is(text);
    return read_queue_layout(is, g);
}

std::string report_to_csv(const Graph& g, const std::vector<std::int32_t>& page,
                          std::int32_t pages, const LayoutReport& rep) {
    std::vector<std::uint64_t> edges_per_page(static_cast<std::size_t>(pages), 0);
    for (auto p : page) ++edges_per_page[static_cast<std::size_t>(p - 1)];
    (void)g;
    std::ostringstream os;
    os << "page,edges,violations,is_matching\n";
    for (std::int32_t p = 1; p <= pages; ++p) {
        os << p << ',' << edges_per_page[static_cast<std::size_t>(p - 1)] << ','
           << rep.per_page_violations[static_cast<std::size_t>(p - 1)] << ','
           << (rep.per_page_is_matching[static_cast<std::size_t>(p - 1)] ? 1 : 0) << '\n';
    }
    return os.str();
}

void save_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
}

std::string load_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace stacklab
