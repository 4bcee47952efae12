#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schedlab/cloud/model.hpp"
#include "schedlab/fuzzy/inference.hpp"
#include "schedlab/fuzzy/rule_gen.hpp"

namespace schedlab::fuzzy {

/// Which criteria score a job/VM pairing:
///  - type_a: job length vs CPU speed and RAM,
///  - type_b: job length vs bandwidth,
///  - crossover: job length vs bandwidth, CPU speed and RAM (all criteria).
enum class Variant { type_a, type_b, crossover };
const char* to_string(Variant v);

struct VariableSpec {
    double lo = 0, hi = 1;
    /// Explicit breakpoints; when absent the proportional template applies.
    std::optional<std::array<FuzzySet, 3>> sets;
};

/// Full configuration of the scoring engine. Defaults follow Table-1-style
/// attribute ranges with the vm_mips sets pinned so that mips=1000 fuzzifies
/// to (0.3, 0.7, 0.0).
struct FuzzyConfig {
    int resolution = 201;
    VariableSpec job_length{1000.0, 20000.0, std::nullopt};
    VariableSpec vm_mips{500.0, 2000.0,
                         std::array<FuzzySet, 3>{FuzzySet{"low", 500, 500, 650, 1150},
                                                 FuzzySet{"medium", 650, 1150, 1150, 1650},
                                                 FuzzySet{"high", 1150, 1650, 2000, 2000}}};
    VariableSpec vm_ram{256.0, 2048.0, std::nullopt};
    VariableSpec vm_bandwidth{500.0, 1000.0, std::nullopt};
    RuleBands bands;
    std::map<std::string, double> weights_type_a{{"vm_mips", 0.6}, {"vm_ram", 0.4}};
    std::map<std::string, double> weights_type_b{{"vm_bandwidth", 1.0}};
    std::map<std::string, double> weights_crossover{
        {"vm_mips", 0.5}, {"vm_ram", 0.3}, {"vm_bandwidth", 0.2}};
};

/// Builds the three variant inference systems from one FuzzyConfig and
/// evaluates job/VM suitability through them. Immutable and thread-safe.
class SuitabilityModel {
public:
    explicit SuitabilityModel(const FuzzyConfig& cfg = FuzzyConfig{});

    const InferenceSystem& system(Variant v) const;
    const FuzzyConfig& config() const { return cfg_; }

    /// Crisp suitability of one pairing in [0,1] (scalar path).
    double suitability(const cloud::Job& job, const cloud::VmSpec& vm, Variant v) const;

    /// Row-major n_jobs x n_vms table, evaluated with the chosen kernel
    /// backend. Indexed by job id and vm id.
    std::vector<double> build_table(const std::vector<cloud::Job>& jobs,
                                    const std::vector<cloud::VmSpec>& vms, Variant v,
                                    simd::Backend backend) const;

    /// The input variable built for `name` (job_length, vm_mips, vm_ram,
    /// vm_bandwidth), for inspection and CLI reporting.
    const LinguisticVariable& variable(const std::string& name) const;

private:
    std::vector<double> variant_inputs(const cloud::Job& job, const cloud::VmSpec& vm,
                                       Variant v) const;

    FuzzyConfig cfg_;
    LinguisticVariable job_length_, vm_mips_, vm_ram_, vm_bandwidth_, output_;
    std::unique_ptr<InferenceSystem> type_a_, type_b_, crossover_;
};

}  // namespace schedlab::fuzzy
