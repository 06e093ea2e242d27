// Copyright 2026 The loqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "loqsim/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "loqsim/errors.hpp"

namespace loqsim {

using ordered_json = nlohmann::ordered_json;

std::string to_string(ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::Json:
            return "json";
        case ReportFormat::Csv:
            return "csv";
        case ReportFormat::Table:
            return "table";
    }
    return "table";
}

ReportFormat report_format_from_string(const std::string &s) {
    std::string lower;
    lower.reserve(s.size());
    for (char c : s) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (lower == "json") {
        return ReportFormat::Json;
    }
    if (lower == "csv") {
        return ReportFormat::Csv;
    }
    if (lower == "table") {
        return ReportFormat::Table;
    }
    throw InvalidArgumentError("unknown format '" + s + "' (expected json, csv or table)");
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

/// Rendering of a residual phase with numerical dust snapped away.
std::string format_phase(cplx phase) {
    double re = phase.real();
    double im = phase.imag();
    if (std::abs(re) < 1e-9) {
        re = 0.0;
    }
    if (std::abs(im) < 1e-9) {
        im = 0.0;
    }
    if (im == 0.0) {
        return format_double(re);
    }
    if (re == 0.0) {
        if (im == 1.0) {
            return "i";
        }
        if (im == -1.0) {
            return "-i";
        }
        return format_double(im) + "i";
    }
    return format_double(re) + (im > 0 ? "+" : "") + format_double(im) + "i";
}

/// Column-aligned plain-text table: pads every cell to its column width.
std::string layout_table(const std::vector<std::vector<std::string>> &rows) {
    std::vector<size_t> widths;
    for (const auto &row : rows) {
        if (widths.size() < row.size()) {
            widths.resize(row.size(), 0);
        }
        for (size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    for (const auto &row : rows) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line.append(widths[c] - row[c].size() + 2, ' ');
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string csv_join(const std::vector<std::string> &cells) {
    std::string line;
    for (size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) {
            line += ',';
        }
        line += cells[c];
    }
    line += '\n';
    return line;
}

/// Non-default noise fields as "key=value" pairs ("ideal" when none).
std::string noise_summary(const NoiseParams &noise) {
    const NoiseParams ideal;
    std::vector<std::string> parts;
    for (size_t i = 0; i < noise.mu_per_source.size(); ++i) {
        if (noise.mu_per_source[i] != ideal.mu_per_source[i]) {
            parts.push_back("mu" + std::to_string(i + 1) + "=" +
                            format_double(noise.mu_per_source[i]));
        }
    }
    const auto add = [&](const char *name, double value, double ideal_value) {
        if (value != ideal_value) {
            parts.push_back(std::string(name) + "=" + format_double(value));
        }
    };
    add("overlap_pbs", noise.overlap_pbs, ideal.overlap_pbs);
    add("overlap_bs1", noise.overlap_bs1, ideal.overlap_bs1);
    add("overlap_bs2", noise.overlap_bs2, ideal.overlap_bs2);
    add("pair23_fidelity", noise.pair23_fidelity, ideal.pair23_fidelity);
    add("pair45_fidelity", noise.pair45_fidelity, ideal.pair45_fidelity);
    add("input_state_fidelity", noise.input_state_fidelity, ideal.input_state_fidelity);
    add("oam_leakage", noise.oam_leakage, ideal.oam_leakage);
    add("background", noise.background_weight, ideal.background_weight);
    if (noise.lossy_elements) {
        parts.push_back("lossy_elements=true");
    }
    if (parts.empty()) {
        return "ideal";
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += parts[i];
    }
    return out;
}

ordered_json noise_to_json(const NoiseParams &noise) {
    ordered_json j;
    j["mu_per_source"] = noise.mu_per_source;
    j["overlap_pbs"] = noise.overlap_pbs;
    j["overlap_bs1"] = noise.overlap_bs1;
    j["overlap_bs2"] = noise.overlap_bs2;
    j["pair23_fidelity"] = noise.pair23_fidelity;
    j["pair45_fidelity"] = noise.pair45_fidelity;
    j["input_state_fidelity"] = noise.input_state_fidelity;
    j["oam_leakage"] = noise.oam_leakage;
    j["background_weight"] = noise.background_weight;
    j["lossy_elements"] = noise.lossy_elements;
    return j;
}

ordered_json record_to_json(const TeleportReport &r) {
    ordered_json j;
    j["input"] = to_string(r.input_id);
    j["outcome"] = to_string(r.outcome);
    j["success_probability"] = r.success_probability;
    j["fidelity"] = r.fidelity;
    if (r.pauli_expectations) {
        ordered_json p;
        p["xx"] = r.pauli_expectations->xx;
        p["yy"] = r.pauli_expectations->yy;
        p["zz"] = r.pauli_expectations->zz;
        j["pauli"] = p;
    }
    ordered_json outcomes = ordered_json::array();
    for (const auto &o : r.outcomes) {
        ordered_json oj;
        oj["outcome"] = to_string(o.outcome);
        oj["probability"] = o.probability;
        oj["fidelity"] = o.fidelity;
        outcomes.push_back(oj);
    }
    j["outcomes"] = outcomes;
    return j;
}

std::string render_teleport_like(const char *command, const std::vector<TeleportReport> &records,
                                 const NoiseParams &noise, ReportFormat fmt,
                                 const SampledCounts *counts) {
    if (fmt == ReportFormat::Json) {
        ordered_json j;
        j["schema_version"] = kReportSchemaVersion;
        j["command"] = command;
        j["noise"] = noise_to_json(noise);
        ordered_json recs = ordered_json::array();
        for (size_t i = 0; i < records.size(); ++i) {
            ordered_json r = record_to_json(records[i]);
            if (counts != nullptr && i < counts->per_record.size()) {
                ordered_json c;
                c[to_string(records[i].outcomes[0].outcome)] = counts->per_record[i][0];
                c[to_string(records[i].outcomes[1].outcome)] = counts->per_record[i][1];
                c["no_event"] = counts->per_record[i][2];
                r["counts"] = c;
            }
            recs.push_back(r);
        }
        j["records"] = recs;
        if (counts != nullptr) {
            j["shots"] = counts->shots;
            j["seed"] = counts->seed;
        }
        return j.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"input", "outcome", "success_probability", "fidelity", "xx", "yy", "zz"});
    for (const auto &r : records) {
        std::vector<std::string> row = {
            to_string(r.input_id),
            to_string(r.outcome),
            format_double(r.success_probability),
            format_double(r.fidelity),
        };
        if (r.pauli_expectations) {
            row.push_back(format_double(r.pauli_expectations->xx));
            row.push_back(format_double(r.pauli_expectations->yy));
            row.push_back(format_double(r.pauli_expectations->zz));
        } else {
            row.insert(row.end(), {"-", "-", "-"});
        }
        rows.push_back(std::move(row));
    }

    if (fmt == ReportFormat::Csv) {
        std::string out;
        for (const auto &row : rows) {
            out += csv_join(row);
        }
        return out;
    }

    std::string out = std::string(command) + " report\n";
    out += "noise: " + noise_summary(noise) + "\n";
    out += layout_table(rows);
    if (counts != nullptr) {
        out += "shots: " + std::to_string(counts->shots) +
               " (seed " + std::to_string(counts->seed) + ")\n";
        std::vector<std::vector<std::string>> crows;
        crows.push_back({"input", "phi-:omega+", "phi+:omega-", "no_event"});
        for (size_t i = 0; i < records.size() && i < counts->per_record.size(); ++i) {
            crows.push_back({to_string(records[i].input_id),
                             std::to_string(counts->per_record[i][0]),
                             std::to_string(counts->per_record[i][1]),
                             std::to_string(counts->per_record[i][2])});
        }
        out += layout_table(crows);
    }
    return out;
}

}  // namespace

std::string render_teleport(const std::vector<TeleportReport> &records, const NoiseParams &noise,
                            ReportFormat fmt, const SampledCounts *counts) {
    return render_teleport_like("teleport", records, noise, fmt, counts);
}

std::string render_budget(const std::vector<TeleportReport> &records, const NoiseParams &noise,
                          ReportFormat fmt) {
    return render_teleport_like("budget", records, noise, fmt, nullptr);
}

std::string render_bsm_table(const std::vector<ConformanceRow> &pbs_rows,
                             const std::vector<ConformanceRow> &bs_rows, ReportFormat fmt) {
    const auto row_cells = [](const ConformanceRow &r) {
        return std::vector<std::string>{
            r.id,
            r.input_label,
            r.coincidence_expected ? "yes" : "no",
            r.coincidence_actual ? "yes" : "no",
            format_double(r.overlap),
            format_phase(r.residual_phase),
            r.match ? "MATCH" : "MISMATCH",
        };
    };
    const std::vector<std::string> header = {"id",      "input", "coincidence_expected",
                                             "coincidence_actual", "overlap", "phase",
                                             "status"};

    if (fmt == ReportFormat::Json) {
        ordered_json j;
        j["schema_version"] = kReportSchemaVersion;
        j["command"] = "bsm-table";
        const auto table_json = [](const std::vector<ConformanceRow> &rows) {
            ordered_json arr = ordered_json::array();
            for (const auto &r : rows) {
                ordered_json e;
                e["id"] = r.id;
                e["input"] = r.input_label;
                e["coincidence_expected"] = r.coincidence_expected;
                e["coincidence_actual"] = r.coincidence_actual;
                e["overlap"] = r.overlap;
                e["phase"] = format_phase(r.residual_phase);
                e["match"] = r.match;
                arr.push_back(e);
            }
            return arr;
        };
        j["pbs_rows"] = table_json(pbs_rows);
        j["bs_rows"] = table_json(bs_rows);
        j["all_match"] = std::all_of(pbs_rows.begin(), pbs_rows.end(),
                                     [](const ConformanceRow &r) { return r.match; }) &&
                         std::all_of(bs_rows.begin(), bs_rows.end(),
                                     [](const ConformanceRow &r) { return r.match; });
        return j.dump(2) + "\n";
    }

    if (fmt == ReportFormat::Csv) {
        std::string out = csv_join(header);
        for (const auto &r : pbs_rows) {
            out += csv_join(row_cells(r));
        }
        for (const auto &r : bs_rows) {
            out += csv_join(row_cells(r));
        }
        return out;
    }

    std::string out = "polarizing beam-splitter table\n";
    std::vector<std::vector<std::string>> rows = {header};
    for (const auto &r : pbs_rows) {
        rows.push_back(row_cells(r));
    }
    out += layout_table(rows);
    out += "beam-splitter table\n";
    rows = {header};
    for (const auto &r : bs_rows) {
        rows.push_back(row_cells(r));
    }
    out += layout_table(rows);
    return out;
}

std::string render_hom(const HomScanResult &scan, Interferometer which, double tau_fs,
                       double max_overlap, ReportFormat fmt) {
    const std::string formula =
        scan.formula == HomFormula::Dip ? "dip" : "dip-peak";
    if (fmt == ReportFormat::Json) {
        ordered_json j;
        j["schema_version"] = kReportSchemaVersion;
        j["command"] = "hom";
        j["interferometer"] = to_string(which);
        j["tau_fs"] = tau_fs;
        j["max_overlap"] = max_overlap;
        j["visibility"] = scan.visibility;
        j["formula"] = formula;
        ordered_json points = ordered_json::array();
        for (size_t i = 0; i < scan.delays_fs.size(); ++i) {
            ordered_json p;
            p["delay_fs"] = scan.delays_fs[i];
            p["coincidence"] = scan.coincidences[i];
            points.push_back(p);
        }
        j["points"] = points;
        return j.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"delay_fs", "coincidence"});
    for (size_t i = 0; i < scan.delays_fs.size(); ++i) {
        rows.push_back({format_double(scan.delays_fs[i]), format_double(scan.coincidences[i])});
    }
    if (fmt == ReportFormat::Csv) {
        std::string out;
        for (const auto &row : rows) {
            out += csv_join(row);
        }
        return out;
    }
    std::string out = "hom scan\n";
    out += "interferometer: " + to_string(which) + "\n";
    out += "tau_fs: " + format_double(tau_fs) + "\n";
    out += "max_overlap: " + format_double(max_overlap) + "\n";
    out += "visibility: " + format_double(scan.visibility) + "\n";
    out += "formula: " + formula + "\n";
    out += layout_table(rows);
    return out;
}

std::string render_cascade(const CascadeResult &result, ReportFormat fmt) {
    std::string arrows;
    for (size_t i = 0; i < result.counts.size(); ++i) {
        if (i > 0) {
            arrows += " \xE2\x86\x92 ";  // " → "
        }
        arrows += std::to_string(result.counts[i]);
    }
    const auto preserved_str = [](const std::vector<int> &dofs) {
        if (dofs.empty()) {
            return std::string("-");
        }
        std::string s;
        for (size_t i = 0; i < dofs.size(); ++i) {
            if (i > 0) {
                s += ',';
            }
            s += std::to_string(dofs[i]);
        }
        return s;
    };

    if (fmt == ReportFormat::Json) {
        ordered_json j;
        j["schema_version"] = kReportSchemaVersion;
        j["command"] = "cascade";
        j["n"] = result.n;
        j["counts"] = result.counts;
        j["final"] = to_string(result.final_labels);
        ordered_json stages = ordered_json::array();
        for (const auto &s : result.stages) {
            ordered_json e;
            e["kind"] = to_string(s.kind);
            if (s.dof >= 0) {
                e["dof"] = s.dof;
            }
            if (!s.preserved_dofs.empty()) {
                e["preserved_dofs"] = s.preserved_dofs;
            }
            e["survivors_in"] = s.survivors_in;
            e["survivors_out"] = s.survivors_out;
            e["counted"] = s.counted;
            stages.push_back(e);
        }
        j["stages"] = stages;
        return j.dump(2) + "\n";
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"stage", "kind", "dof", "preserves", "in", "out", "counted"});
    for (size_t i = 0; i < result.stages.size(); ++i) {
        const auto &s = result.stages[i];
        rows.push_back({std::to_string(i + 1), to_string(s.kind),
                        s.dof >= 0 ? std::to_string(s.dof) : "-",
                        preserved_str(s.preserved_dofs), std::to_string(s.survivors_in),
                        std::to_string(s.survivors_out), s.counted ? "yes" : "no"});
    }
    if (fmt == ReportFormat::Csv) {
        std::string out = csv_join({"n", "counts", "final"});
        std::string compact;
        for (size_t i = 0; i < result.counts.size(); ++i) {
            if (i > 0) {
                compact += ' ';
            }
            compact += std::to_string(result.counts[i]);
        }
        out += csv_join({std::to_string(result.n), compact, to_string(result.final_labels)});
        for (const auto &row : rows) {
            out += csv_join(row);
        }
        return out;
    }
    std::string out = "cascade N=" + std::to_string(result.n) + "\n";
    out += "counts: " + arrows + "\n";
    out += "final: " + to_string(result.final_labels) + "\n";
    out += layout_table(rows);
    return out;
}

}  // namespace loqsim
