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

// Command-line front end for the tfa shared library. Exit codes: 0 success,
// 1 verification failure (a mathematical claim failed on the given input),
// 2 usage or input error. Payloads on codes 0 and 1 are single-line JSON on
// stdout; diagnostics go to stderr.

#include <cerrno>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tfa/tfa.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// Energy defect above this is a computation error, not roundoff.
constexpr double kParsevalGate = 1e-9;

struct SignalHandle {
    tfa_signal* p = nullptr;
    ~SignalHandle() { tfa_signal_free(p); }
};

struct TableHandle {
    tfa_table* p = nullptr;
    ~TableHandle() { tfa_table_free(p); }
};

struct SupportHandle {
    tfa_support* p = nullptr;
    ~SupportHandle() { tfa_support_free(p); }
};

struct StringHandle {
    char* p = nullptr;
    ~StringHandle() { tfa_string_free(p); }
    std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

void print_error(const std::string& context) {
    const char* detail = tfa_last_error();
    if (detail != nullptr && detail[0] != '\0') {
        std::fprintf(stderr, "error: %s: %s\n", context.c_str(), detail);
    } else {
        std::fprintf(stderr, "error: %s\n", context.c_str());
    }
}

int usage_error(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return kExitUsage;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

void print_payload(const std::string& json) { std::printf("%s\n", json.c_str()); }

// "a,b" -> two integers.
bool parse_int_pair(const std::string& text, long long& a, long long& b) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t used = 0;
        a = std::stoll(text.substr(0, comma), &used);
        if (used != comma) return false;
        const std::string rest = text.substr(comma + 1);
        b = std::stoll(rest, &used);
        return used == rest.size() && !rest.empty();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_double_pair(const std::string& text, double& a, double& b) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t used = 0;
        a = std::stod(text.substr(0, comma), &used);
        if (used != comma) return false;
        const std::string rest = text.substr(comma + 1);
        b = std::stod(rest, &used);
        return used == rest.size() && !rest.empty();
    } catch (const std::exception&) {
        return false;
    }
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// TFA_SEED, when set, wins over --seed regardless of flag presence, so
// wrapper scripts can pin determinism without knowing each command's flags.
bool apply_seed_env(std::uint64_t& seed, std::string& error) {
    const char* env = std::getenv("TFA_SEED");
    if (env == nullptr || env[0] == '\0') return true;
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0') {
        error = std::string("TFA_SEED is not an unsigned integer: \"") + env + "\"";
        return false;
    }
    seed = v;
    return true;
}

bool load_signal(const std::string& path, SignalHandle& out, int& exit_code) {
    std::string text;
    if (!read_file(path, text)) {
        exit_code = usage_error("cannot read signal file " + path);
        return false;
    }
    if (tfa_signal_from_json(text.c_str(), &out.p) != TFA_OK) {
        print_error("parsing " + path);
        exit_code = kExitUsage;
        return false;
    }
    return true;
}

int run_stft(long long n, const std::string& f_path, const std::string& g_path,
             const std::string& out_path, double tau) {
    SignalHandle f;
    SignalHandle g;
    int rc = 0;
    if (!load_signal(f_path, f, rc) || !load_signal(g_path, g, rc)) return rc;

    int64_t nf = 0;
    int64_t ng = 0;
    tfa_signal_length(f.p, &nf);
    tfa_signal_length(g.p, &ng);
    if (nf != n || ng != n) {
        return usage_error("signal moduli " + std::to_string(nf) + ", " + std::to_string(ng) +
                           " do not match --n " + std::to_string(n));
    }

    StringHandle report;
    int64_t support_size = 0;
    double residual = 0.0;
    if (tfa_stft_report(f.p, g.p, tau, &support_size, &residual, &report.p) != TFA_OK) {
        print_error("computing the transform");
        return kExitUsage;
    }
    if (!out_path.empty()) {
        TableHandle table;
        StringHandle csv;
        if (tfa_stft(f.p, g.p, &table.p) != TFA_OK ||
            tfa_table_to_csv(table.p, &csv.p) != TFA_OK) {
            print_error("serializing the table");
            return kExitUsage;
        }
        if (!write_file(out_path, csv.str())) {
            return usage_error("cannot write " + out_path);
        }
    }
    print_payload(report.str());
    return residual > kParsevalGate ? kExitVerificationFailure : kExitOk;
}

int run_extremal(long long n, long long b, long long p, const std::string& lambda_text,
                 const std::string& mu_text, const std::string& c1_text,
                 const std::string& c2_text, const std::string& f_path,
                 const std::string& g_path) {
    if (n < 1) return usage_error("--n must be positive");
    if (b < 1 || n % b != 0) {
        return usage_error(std::to_string(b) + " does not divide " + std::to_string(n));
    }
    if (p < 0 || p >= b) return usage_error("--p must lie in [0, b)");

    long long lj = 0;
    long long lk = 0;
    long long mj = 0;
    long long mk = 0;
    double c1r = 1.0;
    double c1i = 0.0;
    double c2r = 1.0;
    double c2i = 0.0;
    if (!parse_int_pair(lambda_text, lj, lk)) return usage_error("--lambda expects \"j,k\"");
    if (!parse_int_pair(mu_text, mj, mk)) return usage_error("--mu expects \"j,k\"");
    if (!parse_double_pair(c1_text, c1r, c1i)) return usage_error("--c1 expects \"re,im\"");
    if (!parse_double_pair(c2_text, c2r, c2i)) return usage_error("--c2 expects \"re,im\"");
    auto reduce = [n](long long v) { return ((v % n) + n) % n; };
    lj = reduce(lj);
    lk = reduce(lk);
    mj = reduce(mj);
    mk = reduce(mk);

    std::string spec = "{\"n\":" + std::to_string(n) + ",\"b\":" + std::to_string(b) +
                       ",\"p\":" + std::to_string(p) + ",\"lambda\":[" + std::to_string(lj) +
                       "," + std::to_string(lk) + "],\"mu\":[" + std::to_string(mj) + "," +
                       std::to_string(mk) + "],\"c1\":[" + fmt17(c1r) + "," + fmt17(c1i) +
                       "],\"c2\":[" + fmt17(c2r) + "," + fmt17(c2i) + "]}";

    SignalHandle f;
    SignalHandle g;
    SupportHandle support;
    if (tfa_extremal_pair(spec.c_str(), &f.p, &g.p, &support.p) != TFA_OK) {
        print_error("building the pair");
        return kExitUsage;
    }
    StringHandle f_json;
    StringHandle g_json;
    StringHandle support_json;
    if (tfa_signal_to_json(f.p, &f_json.p) != TFA_OK ||
        tfa_signal_to_json(g.p, &g_json.p) != TFA_OK ||
        tfa_support_to_json(support.p, &support_json.p) != TFA_OK) {
        print_error("serializing the pair");
        return kExitUsage;
    }
    if (!write_file(f_path, f_json.str() + "\n")) return usage_error("cannot write " + f_path);
    if (!write_file(g_path, g_json.str() + "\n")) return usage_error("cannot write " + g_path);

    // The constructed pair must land exactly on the predicted support.
    StringHandle check;
    int64_t support_size = 0;
    if (tfa_stft_report(f.p, g.p, 1e-8, &support_size, nullptr, &check.p) != TFA_OK) {
        print_error("verifying the pair");
        return kExitUsage;
    }
    int64_t predicted = 0;
    tfa_support_size(support.p, &predicted);
    const bool verified = support_size == predicted;

    print_payload("{\"spec\":" + spec + ",\"support\":" + support_json.str() +
                  ",\"verified\":" + (verified ? "true" : "false") + "}");
    return verified ? kExitOk : kExitVerificationFailure;
}

int run_classify(const std::string& f_path, const std::string& g_path, double tau) {
    SignalHandle f;
    SignalHandle g;
    int rc = 0;
    if (!load_signal(f_path, f, rc) || !load_signal(g_path, g, rc)) return rc;

    StringHandle report;
    const tfa_status st = tfa_classify(f.p, g.p, tau, &report.p);
    if (st == TFA_OK) {
        print_payload(report.str());
        return kExitOk;
    }
    if (st == TFA_ERR_NOT_EXTREMAL) {
        print_payload(report.str());
        return kExitVerificationFailure;
    }
    if (st == TFA_ERR_AMBIGUOUS) {
        print_payload(std::string("{\"extremal\":false,\"error\":\"ambiguous\"}"));
        print_error("classification");
        return kExitVerificationFailure;
    }
    print_error("classification");
    return kExitUsage;
}

int finish_verification(tfa_status st, int64_t violations, const StringHandle& json,
                        const char* what) {
    if (st != TFA_OK) {
        print_error(what);
        return kExitUsage;
    }
    print_payload(json.str());
    return violations > 0 ? kExitVerificationFailure : kExitOk;
}

int run_verify(long long n, long long trials, std::uint64_t seed, double tau) {
    int64_t violations = 0;
    StringHandle json;
    const tfa_status st = tfa_verify_weak(n, trials, seed, tau, &violations, &json.p);
    return finish_verification(st, violations, json, "verification run");
}

int run_ds(long long n, const std::string& f_path, long long trials, std::uint64_t seed,
           double tau) {
    if (!f_path.empty()) {
        SignalHandle f;
        int rc = 0;
        if (!load_signal(f_path, f, rc)) return rc;
        StringHandle json;
        if (tfa_check_donoho_stark(f.p, tau, &json.p) != TFA_OK) {
            print_error("product bound check");
            return kExitUsage;
        }
        print_payload(json.str());
        // holds is part of the payload; a false value is a verification failure.
        return json.str().find("\"holds\":false") == std::string::npos
                   ? kExitOk
                   : kExitVerificationFailure;
    }
    if (n < 1) return usage_error("ds requires --n or --f");
    int64_t violations = 0;
    StringHandle json;
    const tfa_status st = tfa_verify_donoho_stark(n, trials, seed, tau, &violations, &json.p);
    return finish_verification(st, violations, json, "product bound run");
}

int run_tao(long long prime, const std::string& f_path, long long trials, std::uint64_t seed,
            double tau) {
    if (!f_path.empty()) {
        SignalHandle f;
        int rc = 0;
        if (!load_signal(f_path, f, rc)) return rc;
        StringHandle json;
        if (tfa_check_tao(f.p, tau, &json.p) != TFA_OK) {
            print_error("sum bound check");
            return kExitUsage;
        }
        print_payload(json.str());
        return json.str().find("\"holds\":false") == std::string::npos
                   ? kExitOk
                   : kExitVerificationFailure;
    }
    if (prime < 1) return usage_error("tao requires --prime or --f");
    int64_t violations = 0;
    StringHandle json;
    const tfa_status st = tfa_verify_tao(prime, trials, seed, tau, &violations, &json.p);
    return finish_verification(st, violations, json, "sum bound run");
}

int run_subgroups(long long n, bool include_points) {
    StringHandle json;
    if (tfa_subgroups(n, include_points ? 1 : 0, &json.p) != TFA_OK) {
        print_error("subgroup enumeration");
        return kExitUsage;
    }
    print_payload(json.str());
    return kExitOk;
}

int run_scan(long long n, const std::string& alphabet, double tau) {
    int64_t violations = 0;
    StringHandle json;
    const tfa_status st = tfa_scan(n, alphabet.c_str(), tau, &violations, &json.p);
    return finish_verification(st, violations, json, "exhaustive scan");
}

int run_abelian_verify(const std::string& group, long long trials, std::uint64_t seed,
                       double tau) {
    int64_t violations = 0;
    StringHandle json;
    const tfa_status st =
        tfa_verify_abelian(group.c_str(), trials, seed, tau, &violations, &json.p);
    return finish_verification(st, violations, json, "group verification run");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-frequency transforms and support bounds on finite groups"};
    app.require_subcommand(1);

    long long n = 0;
    long long b = 0;
    long long p = 0;
    long long prime = 0;
    long long trials = 200;
    std::uint64_t seed = 42;
    double tau = 1e-8;
    std::string f_path;
    std::string g_path;
    std::string out_path;
    std::string lambda_text = "0,0";
    std::string mu_text = "0,0";
    std::string c1_text = "1,0";
    std::string c2_text = "1,0";
    std::string out_f = "f.json";
    std::string out_g = "g.json";
    std::string alphabet = "pm1";
    std::string group;
    bool include_points = false;

    auto* c_stft = app.add_subcommand("stft", "windowed transform of two signal files");
    c_stft->add_option("--n", n, "modulus")->required();
    c_stft->add_option("--f", f_path, "signal JSON file")->required();
    c_stft->add_option("--g", g_path, "window JSON file")->required();
    c_stft->add_option("--out", out_path, "CSV output path");
    c_stft->add_option("--tau", tau, "support threshold");

    auto* c_extremal = app.add_subcommand("extremal", "build a minimum-support pair");
    c_extremal->add_option("--n", n, "modulus")->required();
    c_extremal->add_option("--b", b, "subgroup parameter (divisor of n)")->required();
    c_extremal->add_option("--p", p, "subgroup parameter in [0, b)");
    c_extremal->add_option("--lambda", lambda_text, "window shift \"j,k\"");
    c_extremal->add_option("--mu", mu_text, "pair shift \"j,k\"");
    c_extremal->add_option("--c1", c1_text, "window amplitude \"re,im\"");
    c_extremal->add_option("--c2", c2_text, "signal amplitude \"re,im\"");
    c_extremal->add_option("--out-f", out_f, "output path for f");
    c_extremal->add_option("--out-g", out_g, "output path for g");

    auto* c_classify = app.add_subcommand("classify", "recover pair parameters from files");
    c_classify->add_option("--f", f_path, "signal JSON file")->required();
    c_classify->add_option("--g", g_path, "window JSON file")->required();
    c_classify->add_option("--tau", tau, "support threshold");

    auto* c_verify = app.add_subcommand("verify", "seeded support-bound trials");
    c_verify->add_option("--n", n, "modulus")->required();
    c_verify->add_option("--trials", trials, "trial count");
    c_verify->add_option("--seed", seed, "PRNG seed");
    c_verify->add_option("--tau", tau, "support threshold");

    auto* c_ds = app.add_subcommand("ds", "product bound (signal file or seeded trials)");
    c_ds->add_option("--f", f_path, "signal JSON file");
    c_ds->add_option("--n", n, "modulus for seeded trials");
    c_ds->add_option("--trials", trials, "trial count");
    c_ds->add_option("--seed", seed, "PRNG seed");
    c_ds->add_option("--tau", tau, "support threshold");

    auto* c_tao = app.add_subcommand("tao", "sum bound at prime modulus");
    c_tao->add_option("--f", f_path, "signal JSON file");
    c_tao->add_option("--prime", prime, "prime modulus for seeded trials");
    c_tao->add_option("--trials", trials, "trial count");
    c_tao->add_option("--seed", seed, "PRNG seed");
    c_tao->add_option("--tau", tau, "support threshold");

    auto* c_subgroups = app.add_subcommand("subgroups", "enumerate order-n subgroups");
    c_subgroups->add_option("--n", n, "modulus")->required();
    c_subgroups->add_flag("--points", include_points, "include point lists");

    auto* c_scan = app.add_subcommand("scan", "exhaustive small-alphabet falsification scan");
    c_scan->add_option("--n", n, "modulus (at most 6)")->required();
    c_scan->add_option("--alphabet", alphabet, "binary | pm1 | gauss");
    c_scan->add_option("--tau", tau, "support threshold");

    auto* c_abelian = app.add_subcommand("abelian-verify", "seeded trials on a product group");
    c_abelian->add_option("--group", group, "factors, e.g. 2x4")->required();
    c_abelian->add_option("--trials", trials, "trial count");
    c_abelian->add_option("--seed", seed, "PRNG seed");
    c_abelian->add_option("--tau", tau, "support threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string seed_error;
    if (!apply_seed_env(seed, seed_error)) return usage_error(seed_error);

    if (c_stft->parsed()) return run_stft(n, f_path, g_path, out_path, tau);
    if (c_extremal->parsed()) {
        return run_extremal(n, b, p, lambda_text, mu_text, c1_text, c2_text, out_f, out_g);
    }
    if (c_classify->parsed()) return run_classify(f_path, g_path, tau);
    if (c_verify->parsed()) return run_verify(n, trials, seed, tau);
    if (c_ds->parsed()) return run_ds(n, f_path, trials, seed, tau);
    if (c_tao->parsed()) return run_tao(prime, f_path, trials, seed, tau);
    if (c_subgroups->parsed()) return run_subgroups(n, include_points);
    if (c_scan->parsed()) return run_scan(n, alphabet, tau);
    if (c_abelian->parsed()) return run_abelian_verify(group, trials, seed, tau);
    return usage_error("no subcommand selected");
}
