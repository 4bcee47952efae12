#include "schedlab/fuzzy/suitability.hpp"

#include "schedlab/common.hpp"

namespace schedlab::fuzzy {

const char* to_string(Variant v) {
    switch (v) {
        case Variant::type_a: return "type_a";
        case Variant::type_b: return "type_b";
        case Variant::crossover: return "crossover";
    }
    return "?";
}

namespace {

LinguisticVariable build_variable(const std::string& name, const VariableSpec& spec,
                                  const std::array<std::string, 3>& labels) {
    if (spec.sets) {
        LinguisticVariable var;
        var.name = name;
        var.lo = spec.lo;
        var.hi = spec.hi;
        var.sets = *spec.sets;
        for (int l = 0; l < 3; ++l) var.sets[l].label = labels[l];
        validate_variable(var);
        return var;
    }
    return make_template_variable(name, labels, spec.lo, spec.hi);
}

LinguisticVariable build_output() {
    LinguisticVariable out;
    out.name = "suitability";
    out.lo = 0.0;
    out.hi = 1.0;
    out.sets[0] = {"poor", 0.0, 0.0, 0.25, 0.5};
    out.sets[1] = {"adequate", 0.25, 0.5, 0.5, 0.75};
    out.sets[2] = {"good", 0.5, 0.75, 1.0, 1.0};
    validate_variable(out);
    return out;
}

const std::array<std::string, 3> kInputLabels{"low", "medium", "high"};

}  // namespace

SuitabilityModel::SuitabilityModel(const FuzzyConfig& cfg)
    : cfg_(cfg),
      job_length_(build_variable("job_length", cfg.job_length, kInputLabels)),
      vm_mips_(build_variable("vm_mips", cfg.vm_mips, kInputLabels)),
      vm_ram_(build_variable("vm_ram", cfg.vm_ram, kInputLabels)),
      vm_bandwidth_(build_variable("vm_bandwidth", cfg.vm_bandwidth, kInputLabels)),
      output_(build_output()) {
    const auto make = [&](const std::vector<LinguisticVariable>& inputs,
                          const std::map<std::string, double>& weights) {
        std::vector<std::string> names;
        for (const auto& v : inputs) names.push_back(v.name);
        return std::make_unique<InferenceSystem>(
            inputs, output_, generate_rule_table(names, weights, cfg.bands),
            cfg.resolution);
    };
    type_a_ = make({job_length_, vm_mips_, vm_ram_}, cfg.weights_type_a);
    type_b_ = make({job_length_, vm_bandwidth_}, cfg.weights_type_b);
    crossover_ = make({job_length_, vm_bandwidth_, vm_mips_, vm_ram_},
                      cfg.weights_crossover);
}

const InferenceSystem& SuitabilityModel::system(Variant v) const {
    switch (v) {
        case Variant::type_a: return *type_a_;
        case Variant::type_b: return *type_b_;
        case Variant::crossover: return *crossover_;
    }
    throw Error("unknown variant");
}

std::vector<double> SuitabilityModel::variant_inputs(const cloud::Job& job,
                                                     const cloud::VmSpec& vm,
                                                     Variant v) const {
    switch (v) {
        case Variant::type_a: return {job.length_mi, vm.mips, vm.ram_mb};
        case Variant::type_b: return {job.length_mi, vm.bandwidth};
        case Variant::crossover:
            return {job.length_mi, vm.bandwidth, vm.mips, vm.ram_mb};
    }
    throw Error("unknown variant");
}

double SuitabilityModel::suitability(const cloud::Job& job, const cloud::VmSpec& vm,
                                     Variant v) const {
    const auto xs = variant_inputs(job, vm, v);
    return system(v).evaluate(xs);
}

std::vector<double> SuitabilityModel::build_table(const std::vector<cloud::Job>& jobs,
                                                  const std::vector<cloud::VmSpec>& vms,
                                                  Variant v,
                                                  simd::Backend backend) const {
    const InferenceSystem& sys = system(v);
    const std::size_t k = sys.input_count();
    const std::size_t n = jobs.size() * vms.size();

    // Items laid out job-major: item index = job.id * n_vms + vm.id.
    std::vector<std::vector<double>> cols(k, std::vector<double>(n));
    for (const cloud::Job& job : jobs) {
        for (const cloud::VmSpec& vm : vms) {
            const auto xs = variant_inputs(job, vm, v);
            const std::size_t idx = static_cast<std::size_t>(job.id) * vms.size() +
                                    static_cast<std::size_t>(vm.id);
            for (std::size_t iv = 0; iv < k; ++iv) cols[iv][idx] = xs[iv];
        }
    }
    const double* col_ptrs[simd::kMaxInputs];
    for (std::size_t iv = 0; iv < k; ++iv) col_ptrs[iv] = cols[iv].data();

    std::vector<double> table(n);
    sys.evaluate_batch(col_ptrs, n, table.data(), backend);
    return table;
}

const LinguisticVariable& SuitabilityModel::variable(const std::string& name) const {
    if (name == "job_length") return job_length_;
    if (name == "vm_mips") return vm_mips_;
    if (name == "vm_ram") return vm_ram_;
    if (name == "vm_bandwidth") return vm_bandwidth_;
    throw Error("unknown fuzzy variable '" + name + "'");
}

}  // namespace schedlab::fuzzy
