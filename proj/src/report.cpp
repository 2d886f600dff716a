#include "kcut/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "kcut/edge_list.hpp"
#include "kcut/errors.hpp"

namespace kcut {

JsonValue JsonValue::array() {
    JsonValue v;
    v.kind_ = Kind::Array;
    return v;
}

JsonValue JsonValue::object() {
    JsonValue v;
    v.kind_ = Kind::Object;
    return v;
}

void JsonValue::push_back(JsonValue v) {
    if (kind_ != Kind::Array) throw std::logic_error("push_back on non-array JSON value");
    items_.push_back(std::move(v));
}

void JsonValue::set(const std::string& key, JsonValue v) {
    if (kind_ != Kind::Object) throw std::logic_error("set on non-object JSON value");
    fields_.emplace_back(key, std::move(v));
}

namespace {

void dump_string(std::ostream& out, const std::string& s) {
    out << '"';
    for (unsigned char ch : s) {
        switch (ch) {
        case '"': out << "\\\""; break;
        case '\\': out << "\\\\"; break;
        case '\n': out << "\\n"; break;
        case '\r': out << "\\r"; break;
        case '\t': out << "\\t"; break;
        default:
            if (ch < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out << buf;
            } else {
                out << static_cast<char>(ch);
            }
        }
    }
    out << '"';
}

} // namespace

void JsonValue::dump(std::ostream& out) const {
    switch (kind_) {
    case Kind::Null:
        out << "null";
        break;
    case Kind::Bool:
        out << (bool_ ? "true" : "false");
        break;
    case Kind::Int:
        out << int_;
        break;
    case Kind::Real: {
        if (!std::isfinite(real_)) throw numeric_error("non-finite real in report");
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", real_);
        out << buf;
        break;
    }
    case Kind::String:
        dump_string(out, str_);
        break;
    case Kind::Array: {
        out << '[';
        bool first = true;
        for (const JsonValue& v : items_) {
            if (!first) out << ',';
            first = false;
            v.dump(out);
        }
        out << ']';
        break;
    }
    case Kind::Object: {
        out << '{';
        bool first = true;
        for (const auto& [key, value] : fields_) {
            if (!first) out << ',';
            first = false;
            dump_string(out, key);
            out << ':';
            value.dump(out);
        }
        out << '}';
        break;
    }
    }
}

std::string JsonValue::dump() const {
    std::ostringstream out;
    dump(out);
    return out.str();
}

std::string graph_digest(const Graph& g) {
    std::ostringstream canonical;
    write_edge_list(canonical, g);
    const std::string text = canonical.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : text) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

JsonValue make_report(const std::string& command, const std::string& input_digest,
                      JsonValue payload) {
    JsonValue doc = JsonValue::object();
    doc.set("schema_version", "1");
    doc.set("command", command);
    doc.set("input_digest", input_digest);
    doc.set("payload", std::move(payload));
    return doc;
}

JsonValue bound_report_json(const BoundReport& r) {
    JsonValue o = JsonValue::object();
    o.set("k", r.k);
    o.set("m", r.m);
    o.set("upper_eigmin", r.upper_eigmin);
    o.set("upper_laplacian", r.upper_laplacian);
    o.set("upper_trivial", r.upper_trivial);
    o.set("lower_trivial", r.lower_trivial);
    o.set("lower_ratio", r.lower_ratio ? JsonValue(*r.lower_ratio) : JsonValue());
    o.set("exact", r.exact ? JsonValue(*r.exact) : JsonValue());
    if (!r.exact_reason.empty()) o.set("exact_reason", r.exact_reason);
    o.set("chromatic_lb", r.chromatic_lb);
    if (r.floors) {
        JsonValue f = JsonValue::object();
        f.set("eigmin", r.floors->eigmin);
        f.set("laplacian", r.floors->laplacian);
        f.set("trivial", r.floors->trivial);
        o.set("floors", std::move(f));
    } else {
        o.set("floors", JsonValue());
    }
    o.set("gap", r.gap);
    return o;
}

JsonValue equality_report_json(const EqualityReport& r) {
    JsonValue o = JsonValue::object();
    o.set("chi", r.chi);
    o.set("k", r.k);
    o.set("t", r.t);
    o.set("n_g", r.n_g);
    o.set("m_g", r.m_g);
    o.set("mu_min_g", r.mu_min_g);
    o.set("bound", r.bound);
    o.set("pinch_cut", r.pinch_cut);
    o.set("exact", r.exact ? JsonValue(*r.exact) : JsonValue());
    if (!r.exact_reason.empty()) o.set("exact_reason", r.exact_reason);
    o.set("clique_g", r.clique_g ? JsonValue(*r.clique_g) : JsonValue());
    o.set("certified", r.certified);
    o.set("method", r.method);
    return o;
}

JsonValue spectrum_json(const Graph& g) {
    const EigenResult adj = jacobi_eigenvalues(adjacency_matrix(g));
    const EigenResult lap = jacobi_eigenvalues(laplacian_matrix(g));
    JsonValue o = JsonValue::object();
    o.set("n", g.order());
    o.set("m", g.total_weight());
    JsonValue a = JsonValue::array();
    for (double v : adj.values) a.push_back(v);
    JsonValue l = JsonValue::array();
    for (double v : lap.values) l.push_back(v);
    o.set("adjacency", std::move(a));
    o.set("laplacian", std::move(l));
    o.set("mu_min", adj.values.front());
    o.set("mu_max", adj.values.back());
    o.set("lambda_max", lap.values.back());
    o.set("tol", std::max(adj.off_residual, lap.off_residual));
    return o;
}

JsonValue cut_json(const CutPartition& p, const std::string& method) {
    JsonValue o = JsonValue::object();
    o.set("method", method);
    o.set("k", p.k);
    o.set("cut_weight", p.cut_weight);
    JsonValue a = JsonValue::array();
    for (int c : p.assignment) a.push_back(c);
    o.set("assignment", std::move(a));
    return o;
}

JsonValue graph_json(const Graph& g, bool include_edges) {
    JsonValue o = JsonValue::object();
    o.set("n", g.order());
    o.set("edge_count", static_cast<std::int64_t>(g.edges().size()));
    o.set("total_weight", g.total_weight());
    if (include_edges) {
        JsonValue edges = JsonValue::array();
        for (const Edge& e : g.edges()) {
            JsonValue row = JsonValue::array();
            row.push_back(e.u);
            row.push_back(e.v);
            row.push_back(e.w);
            edges.push_back(std::move(row));
        }
        o.set("edges", std::move(edges));
    }
    return o;
}

} // namespace kcut
