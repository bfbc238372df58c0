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

#include "tfa/tfa.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "core/abelian.hpp"
#include "core/extremal.hpp"
#include "core/serial.hpp"
#include "core/stft.hpp"
#include "core/uncertainty.hpp"

struct tfa_signal {
    tfa::Signal impl;
};

struct tfa_table {
    tfa::STFTTable impl;
};

struct tfa_support {
    tfa::SupportSet impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string msg) { g_last_error = std::move(msg); }

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs the body, translating exceptions into status codes and recording the
// message for tfa_last_error. Success clears the message.
template <typename Fn>
tfa_status guarded(Fn&& fn) {
    try {
        const tfa_status rc = fn();
        if (rc == TFA_OK) set_error("");
        return rc;
    } catch (const tfa::ParseError& e) {
        set_error(e.what());
        return TFA_ERR_PARSE;
    } catch (const tfa::DomainMismatch& e) {
        set_error(e.what());
        return TFA_ERR_MISMATCH;
    } catch (const tfa::NotExtremal& e) {
        set_error(e.what());
        return TFA_ERR_NOT_EXTREMAL;
    } catch (const tfa::NumericallyAmbiguous& e) {
        set_error(e.what());
        return TFA_ERR_AMBIGUOUS;
    } catch (const tfa::InconsistentTable& e) {
        set_error(e.what());
        return TFA_ERR_INCONSISTENT;
    } catch (const tfa::InvalidArgument& e) {
        set_error(e.what());
        return TFA_ERR_INVALID;
    } catch (const tfa::Error& e) {
        set_error(e.what());
        return TFA_ERR_INTERNAL;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return TFA_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return TFA_ERR_INTERNAL;
    }
}

tfa_status require(bool nonnull) {
    if (nonnull) return TFA_OK;
    set_error("null argument");
    return TFA_ERR_NULL;
}

template <typename... Ptr>
bool all_nonnull(Ptr... p) {
    return ((p != nullptr) && ...);
}

}  // namespace

extern "C" {

const char* tfa_version(void) { return "0.1.0"; }

const char* tfa_last_error(void) { return g_last_error.c_str(); }

void tfa_string_free(char* s) { std::free(s); }
void tfa_signal_free(tfa_signal* s) { delete s; }
void tfa_table_free(tfa_table* t) { delete t; }
void tfa_support_free(tfa_support* s) { delete s; }

tfa_status tfa_signal_from_json(const char* json, tfa_signal** out) {
    if (!all_nonnull(json, out)) return require(false);
    return guarded([&] {
        *out = new tfa_signal{tfa::signal_from_json(json)};
        return TFA_OK;
    });
}

tfa_status tfa_signal_to_json(const tfa_signal* s, char** out) {
    if (!all_nonnull(s, out)) return require(false);
    return guarded([&] {
        *out = copy_string(tfa::signal_to_json(s->impl));
        return TFA_OK;
    });
}

tfa_status tfa_signal_length(const tfa_signal* s, int64_t* out) {
    if (!all_nonnull(s, out)) return require(false);
    *out = s->impl.n;
    set_error("");
    return TFA_OK;
}

tfa_status tfa_stft(const tfa_signal* f, const tfa_signal* g, tfa_table** out) {
    if (!all_nonnull(f, g, out)) return require(false);
    return guarded([&] {
        *out = new tfa_table{tfa::stft(f->impl, g->impl)};
        return TFA_OK;
    });
}

tfa_status tfa_table_to_csv(const tfa_table* t, char** out) {
    if (!all_nonnull(t, out)) return require(false);
    return guarded([&] {
        *out = copy_string(tfa::table_to_csv(t->impl));
        return TFA_OK;
    });
}

tfa_status tfa_table_support(const tfa_table* t, double tau, tfa_support** out) {
    if (!all_nonnull(t, out)) return require(false);
    return guarded([&] {
        *out = new tfa_support{tfa::support_of(t->impl, tau)};
        return TFA_OK;
    });
}

tfa_status tfa_table_parseval_residual(const tfa_table* t, const tfa_signal* f,
                                       const tfa_signal* g, double* out) {
    if (!all_nonnull(t, f, g, out)) return require(false);
    return guarded([&] {
        *out = tfa::parseval_residual(t->impl, f->impl, g->impl);
        return TFA_OK;
    });
}

tfa_status tfa_stft_report(const tfa_signal* f, const tfa_signal* g, double tau,
                           int64_t* support_size, double* parseval_residual, char** json) {
    if (!all_nonnull(f, g, json)) return require(false);
    return guarded([&] {
        const tfa::STFTTable t = tfa::stft(f->impl, g->impl);
        const tfa::SupportSet s = tfa::support_of(t, tau);
        const double residual = tfa::parseval_residual(t, f->impl, g->impl);
        // The support reuses its canonical serialization.
        const std::string out = "{\"support_size\":" + std::to_string(s.size()) +
                                ",\"support\":" + tfa::support_to_json(s) +
                                ",\"parseval_residual\":" + tfa::fmt_double(residual) + "}";
        if (support_size != nullptr) *support_size = s.size();
        if (parseval_residual != nullptr) *parseval_residual = residual;
        *json = copy_string(out);
        return TFA_OK;
    });
}

tfa_status tfa_support_to_json(const tfa_support* s, char** out) {
    if (!all_nonnull(s, out)) return require(false);
    return guarded([&] {
        *out = copy_string(tfa::support_to_json(s->impl));
        return TFA_OK;
    });
}

tfa_status tfa_support_size(const tfa_support* s, int64_t* out) {
    if (!all_nonnull(s, out)) return require(false);
    *out = s->impl.size();
    set_error("");
    return TFA_OK;
}

tfa_status tfa_reconstruct_window(const tfa_table* t, double tau, tfa_signal** out) {
    if (!all_nonnull(t, out)) return require(false);
    return guarded([&] {
        *out = new tfa_signal{tfa::reconstruct_from_auto_stft(t->impl, tau)};
        return TFA_OK;
    });
}

tfa_status tfa_extremal_pair(const char* spec_json, tfa_signal** f, tfa_signal** g,
                             tfa_support** support) {
    if (spec_json == nullptr) return require(false);
    return guarded([&] {
        const tfa::ExtremalSpec spec = tfa::extremal_spec_from_json(spec_json);
        auto [fs, gs] = tfa::make_extremal_pair(spec);
        if (f != nullptr) *f = new tfa_signal{std::move(fs)};
        if (g != nullptr) *g = new tfa_signal{std::move(gs)};
        if (support != nullptr) *support = new tfa_support{tfa::predicted_support(spec)};
        return TFA_OK;
    });
}

tfa_status tfa_classify(const tfa_signal* f, const tfa_signal* g, double tau,
                        char** report_json) {
    if (!all_nonnull(f, g, report_json)) return require(false);
    return guarded([&] {
        auto cls = tfa::classify_extremal(f->impl, g->impl, tau);
        if (!cls.has_value()) {
            const tfa::SupportSet s = tfa::support_of(tfa::stft(f->impl, g->impl), tau);
            tfa::JsonWriter w;
            w.obj_begin();
            w.key("extremal").boolean(false);
            w.key("support_size").num(s.size());
            w.obj_end();
            *report_json = copy_string(w.out());
            set_error("support size " + std::to_string(s.size()) + " exceeds the modulus " +
                      std::to_string(f->impl.n));
            return TFA_ERR_NOT_EXTREMAL;
        }
        *report_json = copy_string(tfa::classification_to_json(*cls));
        return TFA_OK;
    });
}

tfa_status tfa_verify_weak(int64_t n, int64_t trials, uint64_t seed, double tau,
                           int64_t* violations, char** json) {
    if (!all_nonnull(json)) return require(false);
    return guarded([&] {
        const tfa::TrialSummary s = tfa::run_weak_uncertainty_trials(n, trials, seed, tau);
        if (violations != nullptr) *violations = s.violations;
        *json = copy_string(tfa::trial_summary_to_json(s));
        return TFA_OK;
    });
}

tfa_status tfa_verify_donoho_stark(int64_t n, int64_t trials, uint64_t seed, double tau,
                                   int64_t* violations, char** json) {
    if (!all_nonnull(json)) return require(false);
    return guarded([&] {
        const tfa::TrialSummary s = tfa::run_donoho_stark_trials(n, trials, seed, tau);
        if (violations != nullptr) *violations = s.violations;
        *json = copy_string(tfa::trial_summary_to_json(s));
        return TFA_OK;
    });
}

tfa_status tfa_verify_tao(int64_t n, int64_t trials, uint64_t seed, double tau,
                          int64_t* violations, char** json) {
    if (!all_nonnull(json)) return require(false);
    return guarded([&] {
        const tfa::TrialSummary s = tfa::run_tao_trials(n, trials, seed, tau);
        if (violations != nullptr) *violations = s.violations;
        *json = copy_string(tfa::trial_summary_to_json(s));
        return TFA_OK;
    });
}

tfa_status tfa_check_donoho_stark(const tfa_signal* f, double tau, char** json) {
    if (!all_nonnull(f, json)) return require(false);
    return guarded([&] {
        *json = copy_string(tfa::uncertainty_report_to_json(tfa::donoho_stark_check(f->impl, tau)));
        return TFA_OK;
    });
}

tfa_status tfa_check_tao(const tfa_signal* f, double tau, char** json) {
    if (!all_nonnull(f, json)) return require(false);
    return guarded([&] {
        *json = copy_string(tfa::uncertainty_report_to_json(tfa::tao_check(f->impl, tau)));
        return TFA_OK;
    });
}

tfa_status tfa_subgroups(int64_t n, int include_points, char** json) {
    if (!all_nonnull(json)) return require(false);
    return guarded([&] {
        const auto subs = tfa::enumerate_order_n_subgroups(n);
        *json = copy_string(tfa::subgroup_list_to_json(n, subs, include_points != 0));
        return TFA_OK;
    });
}

tfa_status tfa_scan(int64_t n, const char* alphabet, double tau, int64_t* violations,
                    char** json) {
    if (!all_nonnull(alphabet, json)) return require(false);
    return guarded([&] {
        const tfa::ScanReport r = tfa::exhaustive_small_scan(n, tfa::named_alphabet(alphabet), tau);
        if (violations != nullptr) *violations = r.violations;
        *json = copy_string(tfa::scan_report_to_json(r));
        return TFA_OK;
    });
}

tfa_status tfa_verify_abelian(const char* factors, int64_t trials, uint64_t seed, double tau,
                              int64_t* violations, char** json) {
    if (!all_nonnull(factors, json)) return require(false);
    return guarded([&] {
        const tfa::FiniteAbelianGroup g = tfa::FiniteAbelianGroup::make(tfa::parse_factors(factors));
        const tfa::TrialSummary s = tfa::run_abelian_trials(g, trials, seed, tau);
        if (violations != nullptr) *violations = s.violations;
        *json = copy_string(tfa::abelian_trial_summary_to_json(g, s));
        return TFA_OK;
    });
}

}  // extern "C"
