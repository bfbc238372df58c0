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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/abelian.hpp"
#include "core/extremal.hpp"
#include "core/group.hpp"
#include "core/signal.hpp"
#include "core/uncertainty.hpp"

namespace tfa {

/// Streaming JSON emitter with pinned formatting: compact (no whitespace),
/// keys in insertion order, floats with 17 significant digits. Byte-for-byte
/// reproducibility of emitted documents is part of the CLI contract, which
/// rules out library serializers with their own float formatting.
class JsonWriter {
  public:
    JsonWriter& obj_begin();
    JsonWriter& obj_end();
    JsonWriter& arr_begin();
    JsonWriter& arr_end();
    JsonWriter& key(std::string_view k);
    JsonWriter& num(std::int64_t v);
    JsonWriter& num(double v);
    JsonWriter& boolean(bool v);
    JsonWriter& str(std::string_view v);

    const std::string& out() const { return s_; }

  private:
    void sep();
    void append_quoted(std::string_view v);

    std::string s_;
    std::vector<bool> fresh_;  // per nesting level: next element needs no comma
    bool pending_key_ = false;
};

// {"n":N,"re":[...],"im":[...]}
std::string signal_to_json(const Signal& f);
Signal signal_from_json(const std::string& text);

// {"n":N,"points":[[j,k],...]} with points sorted lexicographically
std::string support_to_json(const SupportSet& s);

// {"n":N,"b":b,"p":p,"lambda":[j,k],"mu":[j,k],"c1":[re,im],"c2":[re,im]}
std::string extremal_spec_to_json(const ExtremalSpec& spec);
ExtremalSpec extremal_spec_from_json(const std::string& text);

// {"n":N,"count":c,"subgroups":[{"b":..,"p":..(,"points":[[j,k],..])},...]}
std::string subgroup_list_to_json(std::int64_t n, const std::vector<SubgroupSpec>& subs,
                                  bool include_points);

// {"check":..,"n":..,"support_size":..,"bound":..,"holds":..,"equality":..,...}
std::string uncertainty_report_to_json(const UncertaintyReport& r);

// {"check":..,"n":..,"trials":..,"violations":..,"equality_count":..,
//  "min_support":..,"max_support":..,"support_sizes":[...]}
std::string trial_summary_to_json(const TrialSummary& s);
std::string abelian_trial_summary_to_json(const FiniteAbelianGroup& g, const TrialSummary& s);

// {"n":..,"trials":..,"violations":..,"equality_cases":[...]}
std::string scan_report_to_json(const ScanReport& r);

// {"extremal":true,"spec":{...},"trace":{...},"window_residual":..,"pair_residual":..}
std::string classification_to_json(const Classification& c);

// {"factors":[n1,...,nr]}
std::string group_to_json(const FiniteAbelianGroup& g);

// {"factors":[...],"re":[...],"im":[...]}
std::string group_signal_to_json(const GroupSignal& f);
GroupSignal group_signal_from_json(const std::string& text);

}  // namespace tfa
