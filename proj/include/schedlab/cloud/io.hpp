#pragma once

#include <string>

#include "schedlab/cloud/model.hpp"

namespace schedlab::cloud {

// Reproducibility snapshots: one row per job or VM, full double precision
// (%.17g) so a parse round-trip restores the exact values.
//
//   workload header:       job_id,length_mi,required_pes
//   infrastructure header: vm_id,datacenter_id,host_id,mips,ram_mb,bandwidth,pe_count,price_rate

void write_workload_csv(const std::vector<Job>& jobs, const std::string& path);
std::vector<Job> read_workload_csv(const std::string& path);

void write_infrastructure_csv(const Infrastructure& infra, const std::string& path);
Infrastructure read_infrastructure_csv(const std::string& path);

}  // namespace schedlab::cloud
