#include "spokit/report.hpp"

namespace spokit {
namespace {

bool is_scalar(const Report& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const Report& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool all_scalar(const Report& arr) {
    for (const auto& e : arr)
        if (!is_scalar(e)) return false;
    return true;
}

void write_node(const Report& v, std::string& out, const std::string& indent);

void write_object(const Report& v, std::string& out, const std::string& indent) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        const Report& val = it.value();
        if (is_scalar(val)) {
            out += indent + it.key() + ": " + scalar_text(val) + "\n";
        } else if (val.empty()) {
            out += indent + it.key() + ": " + (val.is_array() ? "[]" : "{}") + "\n";
        } else if (val.is_array() && all_scalar(val)) {
            out += indent + it.key() + ": [";
            bool first = true;
            for (const auto& e : val) {
                if (!first) out += ", ";
                first = false;
                out += scalar_text(e);
            }
            out += "]\n";
        } else {
            out += indent + it.key() + ":\n";
            write_node(val, out, indent + "  ");
        }
    }
}

void write_array(const Report& v, std::string& out, const std::string& indent) {
    for (const auto& e : v) {
        if (is_scalar(e)) {
            out += indent + "- " + scalar_text(e) + "\n";
        } else if (e.is_array() && all_scalar(e)) {
            out += indent + "- [";
            bool first = true;
            for (const auto& x : e) {
                if (!first) out += ", ";
                first = false;
                out += scalar_text(x);
            }
            out += "]\n";
        } else {
            out += indent + "-\n";
            write_node(e, out, indent + "  ");
        }
    }
}

void write_node(const Report& v, std::string& out, const std::string& indent) {
    if (v.is_object())
        write_object(v, out, indent);
    else if (v.is_array())
        write_array(v, out, indent);
    else
        out += indent + scalar_text(v) + "\n";
}

}  // namespace

std::string render_structured(const Report& r) { return r.dump(2) + "\n"; }

std::string render_text(const Report& r) {
    std::string out;
    write_node(r, out, "");
    return out;
}

}  // namespace spokit
