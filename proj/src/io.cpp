#include <mimlab/error.hpp>
#include <mimlab/io.hpp>

#include <fstream>
#include <sstream>

namespace mimlab
{
    namespace
    {
        auto header_and_edges(const Graph & g) -> std::string
        {
            std::string out = "graph " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
            for (auto [u, v] : g.edges())
                out += std::to_string(u) + " " + std::to_string(v) + "\n";
            return out;
        }
    }

    auto GraphFile::bipartite() const -> BipartiteGraph
    {
        if (x_class)
            return BipartiteGraph(graph, *x_class);
        auto coloured = two_color(graph);
        if (auto b = std::get_if<BipartiteGraph>(&coloured))
            return *b;
        throw InvalidParameter("graph is not bipartite");
    }

    auto to_text(const Graph & g) -> std::string
    {
        return header_and_edges(g);
    }

    auto to_text(const BipartiteGraph & b) -> std::string
    {
        auto out = header_and_edges(b.graph());
        out += "bip";
        for (auto v : b.x_class())
            out += " " + std::to_string(v);
        out += "\n";
        return out;
    }

    auto parse_graph(std::istream & in) -> GraphFile
    {
        std::string line;
        int line_no = 0;
        auto fail = [&](const std::string & what) -> ParseError {
            return ParseError("line " + std::to_string(line_no) + ": " + what);
        };

        while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos)
            ++line_no;
        ++line_no;

        std::istringstream header(line);
        std::string tag;
        long long n = -1, m = -1;
        if (! (header >> tag >> n >> m) || tag != "graph" || n < 0 || m < 0)
            throw fail("expected 'graph <n> <m>'");

        std::vector<Edge> edges;
        edges.reserve(m);
        std::optional<std::vector<Vertex>> x_class;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            std::istringstream row(line);
            if (line.starts_with("bip")) {
                row >> tag;
                if (x_class)
                    throw fail("duplicate 'bip' line");
                x_class.emplace();
                long long v;
                while (row >> v) {
                    if (v < 0 || v >= n)
                        throw fail("colour class vertex out of range");
                    x_class->push_back(static_cast<Vertex>(v));
                }
                if (! row.eof())
                    throw fail("malformed 'bip' line");
                continue;
            }
            if (x_class)
                throw fail("edge after 'bip' line");
            long long u, v;
            std::string rest;
            if (! (row >> u >> v) || (row >> rest))
                throw fail("expected '<u> <v>'");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw fail("edge endpoint out of range");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        if (static_cast<long long>(edges.size()) != m)
            throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

        try {
            GraphFile file{Graph(static_cast<int>(n), std::move(edges)), std::move(x_class)};
            if (file.x_class)
                (void) BipartiteGraph(file.graph, *file.x_class);
            return file;
        }
        catch (const InvalidParameter & e) {
            throw ParseError(e.what());
        }
    }

    auto parse_graph(const std::string & text) -> GraphFile
    {
        std::istringstream in(text);
        return parse_graph(in);
    }

    auto read_graph_file(const std::filesystem::path & path) -> GraphFile
    {
        std::ifstream in(path);
        if (! in)
            throw IoFailure("cannot open " + path.string());
        try {
            return parse_graph(in);
        }
        catch (const ParseError & e) {
            throw ParseError(path.string() + ": " + e.what());
        }
    }

    auto write_text_file(const std::filesystem::path & path, const std::string & text) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw IoFailure("cannot write " + path.string());
        out << text;
        if (! out)
            throw IoFailure("write failed for " + path.string());
    }
}
