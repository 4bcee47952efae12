#include "schedlab/cloud/generate.hpp"

namespace schedlab::cloud {

std::vector<Job> generate_workload(const WorkloadConfig& cfg, std::uint64_t seed) {
    if (cfg.n_jobs < 1) throw Error("workload: n_jobs must be >= 1");
    if (!(cfg.length_lo <= cfg.length_hi) || cfg.pes_lo > cfg.pes_hi)
        throw Error("workload: malformed attribute ranges");
    Rng rng(seed);
    std::vector<Job> jobs(static_cast<std::size_t>(cfg.n_jobs));
    for (int i = 0; i < cfg.n_jobs; ++i) {
        Job& j = jobs[static_cast<std::size_t>(i)];
        j.id = i;
        j.length_mi = rng.uniform_real(cfg.length_lo, cfg.length_hi);
        j.required_pes = rng.uniform_int(cfg.pes_lo, cfg.pes_hi);
    }
    return jobs;
}

Infrastructure generate_infrastructure(const InfraConfig& cfg, std::uint64_t seed) {
    if (cfg.vm_count < 1 || cfg.datacenter_count < 1)
        throw Error("infrastructure: vm_count and datacenter_count must be >= 1");
    if (cfg.hosts_lo > cfg.hosts_hi || cfg.pes_lo > cfg.pes_hi)
        throw Error("infrastructure: malformed attribute ranges");
    Rng rng(seed);
    Infrastructure infra;
    for (int dc = 0; dc < cfg.datacenter_count; ++dc) {
        infra.datacenters.push_back({dc});
        const int hosts = rng.uniform_int(cfg.hosts_lo, cfg.hosts_hi);
        for (int h = 0; h < hosts; ++h)
            infra.hosts.push_back({static_cast<int>(infra.hosts.size()), dc});
    }
    for (int v = 0; v < cfg.vm_count; ++v) {
        VmSpec vm;
        vm.id = v;
        vm.mips = rng.uniform_real(cfg.mips_lo, cfg.mips_hi);
        vm.ram_mb = rng.uniform_real(cfg.ram_lo, cfg.ram_hi);
        vm.bandwidth = rng.uniform_real(cfg.bw_lo, cfg.bw_hi);
        vm.pe_count = rng.uniform_int(cfg.pes_lo, cfg.pes_hi);
        vm.price_rate = cfg.price_rate;
        const Host& host = infra.hosts[static_cast<std::size_t>(v) % infra.hosts.size()];
        vm.host_id = host.id;
        vm.datacenter_id = host.datacenter_id;
        infra.vms.push_back(vm);
    }
    // Feasibility guarantee: some VM must carry the maximum PE count.
    bool has_max = false;
    for (const VmSpec& vm : infra.vms) has_max = has_max || vm.pe_count == cfg.pes_hi;
    if (!has_max) infra.vms.back().pe_count = cfg.pes_hi;
    return infra;
}

}  // namespace schedlab::cloud
