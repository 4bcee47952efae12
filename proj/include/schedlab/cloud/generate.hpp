#pragma once

#include <cstdint>

#include "schedlab/cloud/model.hpp"

namespace schedlab::cloud {

struct WorkloadConfig {
    int n_jobs = 100;
    double length_lo = 1000.0, length_hi = 20000.0;  // MI
    int pes_lo = 1, pes_hi = 4;
};

struct InfraConfig {
    int vm_count = 50;
    int datacenter_count = 10;
    int hosts_lo = 2, hosts_hi = 6;
    double mips_lo = 500.0, mips_hi = 2000.0;
    double ram_lo = 256.0, ram_hi = 2048.0;
    double bw_lo = 500.0, bw_hi = 1000.0;
    int pes_lo = 1, pes_hi = 4;
    double price_rate = 1.0;
};

/// Jobs with ids 0..n-1; lengths and PE counts drawn uniformly. The draw
/// order (length, then PEs, per job) is part of the reproducibility contract.
std::vector<Job> generate_workload(const WorkloadConfig& cfg, std::uint64_t seed);

/// Datacenters with a uniform host count each, VMs with uniform attributes
/// placed round-robin across the global host list. Guarantees at least one
/// VM with the maximum PE count (the last VM is promoted if the draw missed
/// it) so any workload under the same PE ceiling stays feasible.
/// Draw order: host counts per datacenter, then per VM mips, ram, bandwidth,
/// PEs.
Infrastructure generate_infrastructure(const InfraConfig& cfg, std::uint64_t seed);

}  // namespace schedlab::cloud
