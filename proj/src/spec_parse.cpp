#include "pastlife/spec_parse.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "pastlife/builtins.hpp"
#include "pastlife/errors.hpp"
#include "pastlife/transforms.hpp"

namespace pastlife {

namespace {

struct Stage {
    std::string kind; // "family", "linear", "prhr"
    std::map<std::string, std::string> kv;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double number(const Stage& st, const std::string& key) {
    const auto it = st.kv.find(key);
    if (it == st.kv.end())
        throw parse_error("stage '" + st.kind + "' is missing required key '" + key + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(it->second, &used);
    } catch (const std::exception&) {
        throw parse_error("value '" + it->second + "' for key '" + key + "' is not a number");
    }
    if (used != it->second.size())
        throw parse_error("value '" + it->second + "' for key '" + key + "' is not a number");
    return v;
}

void reject_unknown_keys(const Stage& st, std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : st.kv) {
        bool ok = false;
        for (const char* a : allowed)
            if (k == a) ok = true;
        if (!ok)
            throw parse_error("unknown key '" + k + "' in stage '" + st.kind + "'");
    }
}

Stage parse_stage(const std::string& text) {
    Stage st;
    std::string family_value, transform_value;
    for (const std::string& tok : tokens(text)) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            if (!st.kind.empty())
                throw parse_error("unexpected bare token '" + tok + "' in stage");
            st.kind = tok;
            continue;
        }
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key.empty() || value.empty())
            throw parse_error("malformed key=value token '" + tok + "'");
        if (key == "family") {
            family_value = value;
        } else if (key == "transform") {
            transform_value = value;
        } else {
            if (!st.kv.emplace(key, value).second)
                throw parse_error("duplicate key '" + key + "' in stage");
        }
    }
    if (!family_value.empty()) {
        if (!st.kind.empty())
            throw parse_error("stage mixes a bare name with family=");
        st.kind = "family:" + family_value;
    } else if (!transform_value.empty()) {
        if (!st.kind.empty())
            throw parse_error("stage mixes a bare name with transform=");
        st.kind = transform_value;
    }
    if (st.kind.empty()) throw parse_error("stage '" + text + "' names no family or transform");
    return st;
}

DistPtr apply_family(const Stage& st, const std::string& family) {
    if (family == "uniform") {
        reject_unknown_keys(st, {"b"});
        return make_builtin("uniform", {number(st, "b")});
    }
    if (family == "exponential") {
        reject_unknown_keys(st, {"lambda"});
        return make_builtin("exponential", {number(st, "lambda")});
    }
    if (family == "power") {
        reject_unknown_keys(st, {"k"});
        return make_builtin("power", {number(st, "k")});
    }
    if (family == "weibull") {
        reject_unknown_keys(st, {"shape", "scale"});
        std::vector<double> params = {number(st, "shape")};
        if (st.kv.count("scale")) params.push_back(number(st, "scale"));
        return make_builtin("weibull", params);
    }
    throw parse_error("unknown family '" + family + "'");
}

} // namespace

DistPtr parse_distribution_spec(const std::string& spec) {
    const std::vector<std::string> stage_texts = split(spec, '|');
    DistPtr dist;
    for (std::size_t i = 0; i < stage_texts.size(); ++i) {
        const Stage st = parse_stage(stage_texts[i]);
        const bool is_family = st.kind.rfind("family:", 0) == 0;
        if (i == 0) {
            if (!is_family)
                throw parse_error("the first stage must name a family (family=... )");
            try {
                dist = apply_family(st, st.kind.substr(7));
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what());
            }
            continue;
        }
        if (is_family)
            throw parse_error("only the first stage may name a family");

        try {
            if (st.kind == "linear") {
                reject_unknown_keys(st, {"a", "b"});
                dist = linear_transform(dist, number(st, "a"), number(st, "b"));
            } else if (st.kind == "prhr") {
                reject_unknown_keys(st, {"a"});
                dist = prhr(dist, number(st, "a"));
            } else {
                throw parse_error("unknown transform '" + st.kind + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
    }
    if (!dist) throw parse_error("empty distribution spec");
    return dist;
}

} // namespace pastlife
