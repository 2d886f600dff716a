#ifndef KCUT_REPORT_HPP
#define KCUT_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kcut/bounds.hpp"
#include "kcut/extremal.hpp"
#include "kcut/graph.hpp"
#include "kcut/spectra.hpp"

namespace kcut {

// Minimal ordered JSON tree. Keys keep insertion order and reals are
// emitted with 17 significant digits, so the same document always
// serializes to the same bytes.
class JsonValue {
public:
    JsonValue() : kind_(Kind::Null) {}
    JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
    JsonValue(int v) : kind_(Kind::Int), int_(v) {}
    JsonValue(std::int64_t v) : kind_(Kind::Int), int_(v) {}
    JsonValue(std::uint64_t v) : kind_(Kind::Int), int_(static_cast<std::int64_t>(v)) {}
    JsonValue(double v) : kind_(Kind::Real), real_(v) {}
    JsonValue(const char* s) : kind_(Kind::String), str_(s) {}
    JsonValue(std::string s) : kind_(Kind::String), str_(std::move(s)) {}

    static JsonValue array();
    static JsonValue object();

    void push_back(JsonValue v);                      // array
    void set(const std::string& key, JsonValue v);    // object

    void dump(std::ostream& out) const;
    std::string dump() const;

private:
    enum class Kind { Null, Bool, Int, Real, String, Array, Object };
    Kind kind_;
    bool bool_ = false;
    std::int64_t int_ = 0;
    double real_ = 0.0;
    std::string str_;
    std::vector<JsonValue> items_;
    std::vector<std::pair<std::string, JsonValue>> fields_;
};

// FNV-1a 64 over the canonical edge-list serialization, as 16 hex digits.
std::string graph_digest(const Graph& g);

// One report document per CLI invocation:
//   { "schema_version": "1", "command": ..., "input_digest": ..., "payload": ... }
JsonValue make_report(const std::string& command, const std::string& input_digest,
                      JsonValue payload);

JsonValue bound_report_json(const BoundReport& r);
JsonValue equality_report_json(const EqualityReport& r);
JsonValue spectrum_json(const Graph& g);
JsonValue cut_json(const CutPartition& p, const std::string& method);
JsonValue graph_json(const Graph& g, bool include_edges);

} // namespace kcut

#endif
