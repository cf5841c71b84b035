#pragma once

#include <ckspectra/graph.hpp>

#include <initializer_list>
#include <string>

namespace test {

inline ckspectra::VertexSet set_of(const ckspectra::Graph& g, std::initializer_list<const char*> names) {
    ckspectra::VertexSet s;
    for (const char* n : names)
        s.insert(g.vertex(n));
    return s;
}

inline std::string data_path(const std::string& file) { return std::string(CKSPECTRA_TEST_DATA) + "/" + file; }

} // namespace test
