#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "deit/blockade.hpp"
#include "deit/config.hpp"
#include "deit/eit.hpp"

namespace deit::jobs {

struct CurveSeries {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;  // emitted in order

    void add_meta(const std::string& k, double v);
    void add_meta(const std::string& k, const std::string& v);
};

/// CSV with '#'-prefixed metadata lines, a header row and 12-significant-digit
/// values. Reruns are byte-identical except the generated_at line.
void write_csv(const CurveSeries& series, std::ostream& out, bool timestamp = true);
std::string csv_string(const CurveSeries& series, bool timestamp = true);

/// Known jobs: fig3a, fig3b, fig5a, fig5b, fig7, constants, spectrum, duan.
std::vector<std::string> job_names();
CurveSeries run_job(const std::string& name, const Config& cfg);

eit::MediumParams medium_from_config(const Config& cfg);
blockade::CavityParams cavity_from_config(const Config& cfg);

/// Worker count: min(hardware, DEIT_LAB_THREADS) with a floor of 1.
int worker_count();
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace deit::jobs
