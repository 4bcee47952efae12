#pragma once

#include <string>
#include <vector>

#include "schedlab/common.hpp"

namespace schedlab::cloud {

/// Unit of work: length in million instructions, PE (core) requirement.
struct Job {
    int id = 0;
    double length_mi = 0.0;
    int required_pes = 1;
};

/// Computational resource. price_rate is in cost units per second per
/// 1000 mips. host_id / datacenter_id are placement metadata only.
struct VmSpec {
    int id = 0;
    double mips = 0.0;
    double ram_mb = 0.0;
    double bandwidth = 0.0;
    int pe_count = 1;
    double price_rate = 1.0;
    int host_id = 0;
    int datacenter_id = 0;
};

struct Host {
    int id = 0;
    int datacenter_id = 0;
};

struct Datacenter {
    int id = 0;
};

struct Infrastructure {
    std::vector<Datacenter> datacenters;
    std::vector<Host> hosts;
    std::vector<VmSpec> vms;
};

/// Complete assignment: vm_of_job[job.id] is the VM id (or -1 = unassigned,
/// which evaluate_schedule rejects).
struct Schedule {
    std::vector<int> vm_of_job;
};

enum class DiMode { paper, conventional };
DiMode di_mode_from_string(const std::string& s);
const char* to_string(DiMode m);

struct ScheduleMetrics {
    std::vector<double> per_vm_time;  // seconds, idle VMs at 0
    double makespan = 0.0;
    double t_max = 0.0, t_min = 0.0, t_avg = 0.0;
    double di_paper = 0.0;         // (t_max + t_min) / t_avg
    double di_conventional = 0.0;  // (t_max - t_min) / t_avg
    double total_cost = 0.0;

    double di(DiMode m) const {
        return m == DiMode::paper ? di_paper : di_conventional;
    }
};

/// PE feasibility rule: the VM must have at least as many PEs as the job needs.
inline bool feasible(const Job& job, const VmSpec& vm) {
    return vm.pe_count >= job.required_pes;
}

/// Batch execution model: length / mips, sequential within a VM. The PE
/// requirement gates feasibility only. Throws on non-positive mips.
double execution_time(const Job& job, const VmSpec& vm);

/// Per-VM busy times (VMs run in parallel, jobs on one VM serialize),
/// makespan, both Degree-of-Imbalance variants and total execution cost.
/// Rejects partial or infeasible schedules, naming the offending job.
ScheduleMetrics evaluate_schedule(const Schedule& schedule, const std::vector<Job>& jobs,
                                  const Infrastructure& infra);

/// Feasible VM ids per job (ascending). Throws naming the first job with no
/// feasible VM.
std::vector<std::vector<int>> feasible_vms(const std::vector<Job>& jobs,
                                           const Infrastructure& infra);

}  // namespace schedlab::cloud
