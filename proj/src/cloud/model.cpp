#include "schedlab/cloud/model.hpp"

#include <algorithm>

namespace schedlab::cloud {

DiMode di_mode_from_string(const std::string& s) {
    if (s == "paper") return DiMode::paper;
    if (s == "conventional") return DiMode::conventional;
    throw Error("unknown di_mode '" + s + "' (expected paper|conventional)");
}

const char* to_string(DiMode m) {
    return m == DiMode::paper ? "paper" : "conventional";
}

double execution_time(const Job& job, const VmSpec& vm) {
    if (!(vm.mips > 0.0))
        throw Error("vm " + std::to_string(vm.id) + ": non-positive mips");
    return job.length_mi / vm.mips;
}

ScheduleMetrics evaluate_schedule(const Schedule& schedule, const std::vector<Job>& jobs,
                                  const Infrastructure& infra) {
    if (schedule.vm_of_job.size() != jobs.size())
        throw Error("schedule covers " + std::to_string(schedule.vm_of_job.size()) +
                    " jobs, instance has " + std::to_string(jobs.size()));

    ScheduleMetrics m;
    m.per_vm_time.assign(infra.vms.size(), 0.0);
    for (const Job& job : jobs) {
        if (job.id < 0 || static_cast<std::size_t>(job.id) >= schedule.vm_of_job.size())
            throw Error("job id " + std::to_string(job.id) + " outside schedule range");
        const int v = schedule.vm_of_job[static_cast<std::size_t>(job.id)];
        if (v < 0)
            throw Error("job " + std::to_string(job.id) + " is unassigned");
        if (static_cast<std::size_t>(v) >= infra.vms.size())
            throw Error("job " + std::to_string(job.id) + " assigned to unknown vm " +
                        std::to_string(v));
        const VmSpec& vm = infra.vms[static_cast<std::size_t>(v)];
        if (!feasible(job, vm))
            throw Error("job " + std::to_string(job.id) + " needs " +
                        std::to_string(job.required_pes) + " PEs but vm " +
                        std::to_string(v) + " has " + std::to_string(vm.pe_count));
        const double t = execution_time(job, vm);
        m.per_vm_time[static_cast<std::size_t>(v)] += t;
        m.total_cost += t * vm.price_rate * vm.mips / 1000.0;
    }

    m.t_max = *std::max_element(m.per_vm_time.begin(), m.per_vm_time.end());
    m.t_min = *std::min_element(m.per_vm_time.begin(), m.per_vm_time.end());
    double sum = 0.0;
    for (double t : m.per_vm_time) sum += t;
    m.t_avg = sum / static_cast<double>(m.per_vm_time.size());
    m.makespan = m.t_max;
    if (m.t_avg > 0.0) {
        m.di_paper = (m.t_max + m.t_min) / m.t_avg;
        m.di_conventional = (m.t_max - m.t_min) / m.t_avg;
    }
    return m;
}

std::vector<std::vector<int>> feasible_vms(const std::vector<Job>& jobs,
                                           const Infrastructure& infra) {
    std::vector<std::vector<int>> feas(jobs.size());
    for (const Job& job : jobs) {
        auto& list = feas[static_cast<std::size_t>(job.id)];
        for (const VmSpec& vm : infra.vms)
            if (feasible(job, vm)) list.push_back(vm.id);
        if (list.empty())
            throw Error("job " + std::to_string(job.id) + " has no feasible VM (needs " +
                        std::to_string(job.required_pes) + " PEs)");
    }
    return feas;
}

}  // namespace schedlab::cloud
