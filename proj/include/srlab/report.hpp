#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "srlab/quaternion.hpp"

namespace srlab {

struct sample_row {
    std::string test_id;
    quat point;
    double residual_norm;
};

struct verification_report {
    std::string identity;
    nlohmann::json params;
    std::vector<double> residuals;
    nlohmann::json resolutions;
    nlohmann::json variants;
    bool pass = false;
    std::vector<sample_row> samples;

    double max_residual() const {
        double m = 0.0;
        for (double r : residuals) m = std::max(m, r);
        return m;
    }
};

inline nlohmann::json report_json(const verification_report& r) {
    return {{"identity", r.identity}, {"params", r.params}, {"residuals", r.residuals},
            {"resolutions", r.resolutions}, {"variants", r.variants}, {"pass", r.pass}};
}

inline void write_reports(const std::vector<verification_report>& reports,
                          const std::string& out_dir, unsigned seed) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(out_dir) / "samples");
    nlohmann::json j;
    j["seed"] = seed;
    j["checks"] = nlohmann::json::array();
    bool all = true;
    for (const auto& r : reports) {
        j["checks"].push_back(report_json(r));
        all = all && r.pass;
        if (!r.samples.empty()) {
            std::ofstream csv(fs::path(out_dir) / "samples" / (r.identity + ".csv"));
            csv << "test-id,p0,p1,p2,p3,residual-norm\n";
            for (const auto& s : r.samples)
                csv << s.test_id << ',' << s.point.q0 << ',' << s.point.q1 << ',' << s.point.q2
                    << ',' << s.point.q3 << ',' << s.residual_norm << '\n';
        }
    }
    j["pass"] = all;
    std::ofstream out(fs::path(out_dir) / "report.json");
    out << j.dump(2) << '\n';
}

} // namespace srlab
