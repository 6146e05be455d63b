#include <sstream>

#include <json.hpp>

#include "incmat/harness.hpp"

namespace incmat {

namespace {

using Json = nlohmann::ordered_json;

Json big(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json certificate_json(const Certificate& c) {
    if (const auto* p = std::get_if<PermCert>(&c)) return Json{{"type", "perm"}, {"image", p->image()}};
    if (const auto* g = std::get_if<GLCert>(&c)) {
        Json rows = Json::array();
        const ExactMatrix& m = g->matrix();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().format(m.at(i, j)));
            rows.push_back(std::move(row));
        }
        return Json{{"type", "gl"}, {"q", g->q()}, {"matrix", std::move(rows)}};
    }
    return nullptr;
}

const char* kind_name(RemovalKind k) {
    switch (k) {
    case RemovalKind::Exhaustive: return "exhaustive";
    case RemovalKind::Sampled: return "sampled";
    case RemovalKind::Explicit: return "explicit";
    }
    return "?";
}

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

std::string joined(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string cert_tag(const Certificate& c) {
    if (std::holds_alternative<PermCert>(c)) return "perm";
    if (std::holds_alternative<GLCert>(c)) return "gl";
    return "";
}

} // namespace

std::string report_json(const ExperimentConfig& cfg, const RunSummary& summary) {
    Json grid{{"n", cfg.n}, {"r", cfg.r}, {"s", cfg.s}};
    if (cfg.mode == LatticeMode::Subspace) grid["q"] = cfg.q;
    grid["fields"] = cfg.fields;

    Json removal{{"kind", kind_name(cfg.removal.kind)}};
    if (cfg.removal.kind != RemovalKind::Explicit) removal["max_size"] = cfg.removal.max_size;
    if (cfg.removal.kind == RemovalKind::Sampled) {
        removal["samples"] = cfg.removal.samples;
        removal["seed"] = cfg.removal.seed;
    }

    Json cells = Json::array();
    for (const auto& rep : summary.cells) {
        Json params{{"n", rep.n}, {"r", rep.r}, {"s", rep.s}};
        if (rep.q) params["q"] = *rep.q;
        params["field"] = rep.field;
        Json cell{{"params", std::move(params)},
                  {"removed", rep.removed},
                  {"computed_rank", rep.computed_rank},
                  {"formula_rank", big(rep.formula_rank)},
                  {"formula", rep.formula_source},
                  {"equal", rep.equal},
                  {"within_bound", rep.within_bound},
                  {"certificate", certificate_json(rep.certificate)}};
        if (cfg.timings) cell["ms"] = millis(rep.elapsed);
        cells.push_back(std::move(cell));
    }

    Json skipped = Json::array();
    for (const auto& s : summary.skipped) skipped.push_back(Json{{"params", s.params}, {"reason", s.reason}});

    Json sum{{"total", summary.total()},
             {"equal", summary.equal_count},
             {"unequal", summary.unequal_count},
             {"first_counterexample", summary.first_counterexample ? Json(*summary.first_counterexample) : Json(nullptr)},
             {"skipped", std::move(skipped)}};
    if (cfg.timings) sum["wall_ms"] = millis(summary.wall);

    const Json doc{{"mode", to_string(cfg.mode)},
                   {"grid", std::move(grid)},
                   {"removal", std::move(removal)},
                   {"cells", std::move(cells)},
                   {"summary", std::move(sum)}};
    return doc.dump(2) + "\n";
}

std::string report_csv(const ExperimentConfig& cfg, const RunSummary& summary) {
    std::ostringstream os;
    os << "n,r,s,q,field,removed,computed_rank,formula_rank,equal,within_bound,certificate";
    if (cfg.timings) os << ",ms";
    os << '\n';
    for (const auto& rep : summary.cells) {
        os << rep.n << ',' << rep.r << ',' << rep.s << ',' << (rep.q ? std::to_string(*rep.q) : "") << ','
           << rep.field << ',' << joined(rep.removed) << ',' << rep.computed_rank << ','
           << rep.formula_rank.get_str() << ',' << (rep.equal ? "true" : "false") << ','
           << (rep.within_bound ? "true" : "false") << ',' << cert_tag(rep.certificate);
        if (cfg.timings) os << ',' << millis(rep.elapsed);
        os << '\n';
    }
    return os.str();
}

} // namespace incmat
