/*
 * Copyright 2026 The tfa Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "core/serial.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace tfa {

namespace {

const char* check_name(CheckKind k) {
    switch (k) {
        case CheckKind::kWeak: return "weak";
        case CheckKind::kDonohoStark: return "donoho-stark";
        case CheckKind::kTao: return "tao";
        case CheckKind::kAbelianWeak: return "abelian-weak";
    }
    return "unknown";
}

nlohmann::json parse_document(const std::string& text, const char* what) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
    if (!doc.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    return doc;
}

std::int64_t get_int(const nlohmann::json& obj, const char* key, const char* what) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_integer()) {
        throw ParseError(std::string(what) + ": missing integer field \"" + key + "\"");
    }
    return it->get<std::int64_t>();
}

std::vector<double> get_double_array(const nlohmann::json& obj, const char* key,
                                     const char* what) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_array()) {
        throw ParseError(std::string(what) + ": missing array field \"" + key + "\"");
    }
    std::vector<double> out;
    out.reserve(it->size());
    for (const auto& v : *it) {
        if (!v.is_number()) {
            throw ParseError(std::string(what) + ": field \"" + key + "\" must hold numbers");
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            throw ParseError(std::string(what) + ": field \"" + key + "\" must be finite");
        }
        out.push_back(d);
    }
    return out;
}

// Fixed-length [a, b] integer pair.
std::pair<std::int64_t, std::int64_t> get_int_pair(const nlohmann::json& obj, const char* key,
                                                   const char* what) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_array() || it->size() != 2 ||
        !(*it)[0].is_number_integer() || !(*it)[1].is_number_integer()) {
        throw ParseError(std::string(what) + ": field \"" + key +
                         "\" must be a pair of integers");
    }
    return {(*it)[0].get<std::int64_t>(), (*it)[1].get<std::int64_t>()};
}

cplx get_complex_pair(const nlohmann::json& obj, const char* key, const char* what) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_array() || it->size() != 2 || !(*it)[0].is_number() ||
        !(*it)[1].is_number()) {
        throw ParseError(std::string(what) + ": field \"" + key + "\" must be [re, im]");
    }
    const double re = (*it)[0].get<double>();
    const double im = (*it)[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError(std::string(what) + ": field \"" + key + "\" must be finite");
    }
    return {re, im};
}

void write_complex_values(JsonWriter& w, const std::vector<cplx>& v) {
    w.key("re").arr_begin();
    for (const cplx& z : v) w.num(z.real());
    w.arr_end();
    w.key("im").arr_begin();
    for (const cplx& z : v) w.num(z.imag());
    w.arr_end();
}

void write_point_array(JsonWriter& w, const std::vector<PhasePoint>& pts) {
    w.arr_begin();
    for (const PhasePoint& p : pts) {
        w.arr_begin().num(p.j).num(p.k).arr_end();
    }
    w.arr_end();
}

void write_spec_fields(JsonWriter& w, const ExtremalSpec& spec) {
    w.key("n").num(spec.n);
    w.key("b").num(spec.b);
    w.key("p").num(spec.p);
    w.key("lambda").arr_begin().num(spec.lambda.j).num(spec.lambda.k).arr_end();
    w.key("mu").arr_begin().num(spec.mu.j).num(spec.mu.k).arr_end();
    w.key("c1").arr_begin().num(spec.c1.real()).num(spec.c1.imag()).arr_end();
    w.key("c2").arr_begin().num(spec.c2.real()).num(spec.c2.imag()).arr_end();
}

void write_summary_fields(JsonWriter& w, const TrialSummary& s) {
    w.key("check").str(check_name(s.kind));
    w.key("n").num(s.n);
    w.key("trials").num(s.trials);
    w.key("violations").num(s.violations);
    w.key("equality_count").num(s.equality_count);
    w.key("min_support").num(s.min_support);
    w.key("max_support").num(s.max_support);
    w.key("support_sizes").arr_begin();
    for (std::int64_t v : s.support_sizes) w.num(v);
    w.arr_end();
}

}  // namespace

void JsonWriter::sep() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!fresh_.empty()) {
        if (!fresh_.back()) s_ += ',';
        fresh_.back() = false;
    }
}

JsonWriter& JsonWriter::obj_begin() {
    sep();
    s_ += '{';
    fresh_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::obj_end() {
    s_ += '}';
    fresh_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::arr_begin() {
    sep();
    s_ += '[';
    fresh_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::arr_end() {
    s_ += ']';
    fresh_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
    sep();
    append_quoted(k);
    s_ += ':';
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::num(std::int64_t v) {
    sep();
    s_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::num(double v) {
    sep();
    s_ += fmt_double(v);
    return *this;
}

JsonWriter& JsonWriter::boolean(bool v) {
    sep();
    s_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::str(std::string_view v) {
    sep();
    append_quoted(v);
    return *this;
}

void JsonWriter::append_quoted(std::string_view v) {
    s_ += '"';
    for (char c : v) {
        switch (c) {
            case '"': s_ += "\\\""; break;
            case '\\': s_ += "\\\\"; break;
            case '\n': s_ += "\\n"; break;
            case '\t': s_ += "\\t"; break;
            case '\r': s_ += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    s_ += buf;
                } else {
                    s_ += c;
                }
        }
    }
    s_ += '"';
}

std::string signal_to_json(const Signal& f) {
    JsonWriter w;
    w.obj_begin();
    w.key("n").num(f.n);
    write_complex_values(w, f.v);
    w.obj_end();
    return w.out();
}

Signal signal_from_json(const std::string& text) {
    const nlohmann::json doc = parse_document(text, "signal");
    const std::int64_t n = get_int(doc, "n", "signal");
    if (n < 1) throw ParseError("signal: modulus must be positive");
    const auto re = get_double_array(doc, "re", "signal");
    const auto im = get_double_array(doc, "im", "signal");
    if (static_cast<std::int64_t>(re.size()) != n || static_cast<std::int64_t>(im.size()) != n) {
        throw ParseError("signal: re/im length must equal n");
    }
    std::vector<cplx> v(re.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = cplx(re[i], im[i]);
    return Signal(n, std::move(v));
}

std::string support_to_json(const SupportSet& s) {
    JsonWriter w;
    w.obj_begin();
    w.key("n").num(s.modulus());
    w.key("points");
    write_point_array(w, s.points());
    w.obj_end();
    return w.out();
}

std::string extremal_spec_to_json(const ExtremalSpec& spec) {
    JsonWriter w;
    w.obj_begin();
    write_spec_fields(w, spec);
    w.obj_end();
    return w.out();
}

ExtremalSpec extremal_spec_from_json(const std::string& text) {
    const nlohmann::json doc = parse_document(text, "extremal spec");
    const std::int64_t n = get_int(doc, "n", "extremal spec");
    if (n < 1) throw ParseError("extremal spec: modulus must be positive");
    const std::int64_t b = get_int(doc, "b", "extremal spec");
    const std::int64_t p = get_int(doc, "p", "extremal spec");
    const auto lambda = get_int_pair(doc, "lambda", "extremal spec");
    const auto mu = get_int_pair(doc, "mu", "extremal spec");
    const cplx c1 = get_complex_pair(doc, "c1", "extremal spec");
    const cplx c2 = get_complex_pair(doc, "c2", "extremal spec");
    try {
        return ExtremalSpec::make(n, b, p, PhasePoint(n, lambda.first, lambda.second),
                                  PhasePoint(n, mu.first, mu.second), c1, c2);
    } catch (const Error& e) {
        throw ParseError(std::string("extremal spec: ") + e.what());
    }
}

std::string subgroup_list_to_json(std::int64_t n, const std::vector<SubgroupSpec>& subs,
                                  bool include_points) {
    JsonWriter w;
    w.obj_begin();
    w.key("n").num(n);
    w.key("count").num(static_cast<std::int64_t>(subs.size()));
    w.key("subgroups").arr_begin();
    for (const SubgroupSpec& s : subs) {
        w.obj_begin();
        w.key("b").num(s.b);
        w.key("p").num(s.p);
        if (include_points) {
            w.key("points");
            write_point_array(w, subgroup_points(s).points());
        }
        w.obj_end();
    }
    w.arr_end();
    w.obj_end();
    return w.out();
}

std::string uncertainty_report_to_json(const UncertaintyReport& r) {
    JsonWriter w;
    w.obj_begin();
    w.key("check").str(check_name(r.kind));
    w.key("n").num(r.n);
    w.key("support_size").num(r.support_size);
    w.key("bound").num(r.bound);
    w.key("holds").boolean(r.holds);
    w.key("equality").boolean(r.equality);
    if (r.kind == CheckKind::kWeak || r.kind == CheckKind::kAbelianWeak) {
        w.key("energy_residual").num(r.energy_residual);
        w.key("peak_ratio").num(r.peak_ratio);
    }
    if (r.witness.has_value()) {
        w.key("witness");
        write_point_array(w, r.witness->points());
    }
    w.obj_end();
    return w.out();
}

std::string trial_summary_to_json(const TrialSummary& s) {
    JsonWriter w;
    w.obj_begin();
    write_summary_fields(w, s);
    w.obj_end();
    return w.out();
}

std::string abelian_trial_summary_to_json(const FiniteAbelianGroup& g, const TrialSummary& s) {
    JsonWriter w;
    w.obj_begin();
    w.key("factors").arr_begin();
    for (std::int64_t f : g.factors) w.num(f);
    w.arr_end();
    write_summary_fields(w, s);
    w.obj_end();
    return w.out();
}

std::string scan_report_to_json(const ScanReport& r) {
    JsonWriter w;
    w.obj_begin();
    w.key("n").num(r.n);
    w.key("trials").num(r.trials);
    w.key("violations").num(r.violations);
    w.key("equality_cases").arr_begin();
    for (const EqualityCase& c : r.equality_cases) {
        w.obj_begin();
        w.key("f").obj_begin();
        w.key("n").num(c.f.n);
        write_complex_values(w, c.f.v);
        w.obj_end();
        w.key("g").obj_begin();
        w.key("n").num(c.g.n);
        write_complex_values(w, c.g.v);
        w.obj_end();
        w.key("b").num(c.b);
        w.key("p").num(c.p);
        w.key("mu").arr_begin().num(c.mu.j).num(c.mu.k).arr_end();
        w.obj_end();
    }
    w.arr_end();
    w.obj_end();
    return w.out();
}

std::string classification_to_json(const Classification& c) {
    JsonWriter w;
    w.obj_begin();
    w.key("extremal").boolean(true);
    w.key("spec").obj_begin();
    write_spec_fields(w, c.spec);
    w.obj_end();
    w.key("trace").obj_begin();
    w.key("j0").num(c.trace.j0);
    w.key("k1").num(c.trace.k1);
    w.key("j1").num(c.trace.j1);
    w.obj_end();
    w.key("window_residual").num(c.window_residual);
    w.key("pair_residual").num(c.pair_residual);
    w.obj_end();
    return w.out();
}

std::string group_to_json(const FiniteAbelianGroup& g) {
    JsonWriter w;
    w.obj_begin();
    w.key("factors").arr_begin();
    for (std::int64_t f : g.factors) w.num(f);
    w.arr_end();
    w.obj_end();
    return w.out();
}

std::string group_signal_to_json(const GroupSignal& f) {
    JsonWriter w;
    w.obj_begin();
    w.key("factors").arr_begin();
    for (std::int64_t n : f.group.factors) w.num(n);
    w.arr_end();
    write_complex_values(w, f.v);
    w.obj_end();
    return w.out();
}

GroupSignal group_signal_from_json(const std::string& text) {
    const nlohmann::json doc = parse_document(text, "group signal");
    auto it = doc.find("factors");
    if (it == doc.end() || !it->is_array() || it->empty()) {
        throw ParseError("group signal: missing factor list");
    }
    std::vector<std::int64_t> factors;
    for (const auto& v : *it) {
        if (!v.is_number_integer()) throw ParseError("group signal: factors must be integers");
        factors.push_back(v.get<std::int64_t>());
    }
    FiniteAbelianGroup g = FiniteAbelianGroup::make(std::move(factors));
    const auto re = get_double_array(doc, "re", "group signal");
    const auto im = get_double_array(doc, "im", "group signal");
    if (static_cast<std::int64_t>(re.size()) != g.order ||
        static_cast<std::int64_t>(im.size()) != g.order) {
        throw ParseError("group signal: re/im length must equal the group order");
    }
    std::vector<cplx> v(re.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = cplx(re[i], im[i]);
    return GroupSignal(std::move(g), std::move(v));
}

}  // namespace tfa
