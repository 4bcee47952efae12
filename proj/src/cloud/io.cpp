#include "schedlab/cloud/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace schedlab::cloud {

namespace {

std::string g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    return fields;
}

std::ifstream open_with_header(const std::string& path, const std::string& header) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw Error("'" + path + "': expected header '" + header + "'");
    return in;
}

}  // namespace

void write_workload_csv(const std::vector<Job>& jobs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << "job_id,length_mi,required_pes\n";
    for (const Job& j : jobs)
        out << j.id << ',' << g17(j.length_mi) << ',' << j.required_pes << '\n';
    if (!out) throw Error("write failed for '" + path + "'");
}

std::vector<Job> read_workload_csv(const std::string& path) {
    auto in = open_with_header(path, "job_id,length_mi,required_pes");
    std::vector<Job> jobs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_row(line);
        if (f.size() != 3) throw Error("'" + path + "': malformed row '" + line + "'");
        jobs.push_back({std::stoi(f[0]), std::stod(f[1]), std::stoi(f[2])});
    }
    return jobs;
}

void write_infrastructure_csv(const Infrastructure& infra, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << "vm_id,datacenter_id,host_id,mips,ram_mb,bandwidth,pe_count,price_rate\n";
    for (const VmSpec& vm : infra.vms)
        out << vm.id << ',' << vm.datacenter_id << ',' << vm.host_id << ','
            << g17(vm.mips) << ',' << g17(vm.ram_mb) << ',' << g17(vm.bandwidth) << ','
            << vm.pe_count << ',' << g17(vm.price_rate) << '\n';
    if (!out) throw Error("write failed for '" + path + "'");
}

Infrastructure read_infrastructure_csv(const std::string& path) {
    auto in = open_with_header(
        path, "vm_id,datacenter_id,host_id,mips,ram_mb,bandwidth,pe_count,price_rate");
    Infrastructure infra;
    std::set<int> dcs;
    std::map<int, int> host_dc;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_row(line);
        if (f.size() != 8) throw Error("'" + path + "': malformed row '" + line + "'");
        VmSpec vm;
        vm.id = std::stoi(f[0]);
        vm.datacenter_id = std::stoi(f[1]);
        vm.host_id = std::stoi(f[2]);
        vm.mips = std::stod(f[3]);
        vm.ram_mb = std::stod(f[4]);
        vm.bandwidth = std::stod(f[5]);
        vm.pe_count = std::stoi(f[6]);
        vm.price_rate = std::stod(f[7]);
        infra.vms.push_back(vm);
        dcs.insert(vm.datacenter_id);
        host_dc[vm.host_id] = vm.datacenter_id;
    }
    // Hosts/datacenters are rebuilt from VM placement; hosts that carried no
    // VM are not part of the snapshot.
    for (int dc : dcs) infra.datacenters.push_back({dc});
    for (const auto& [host, dc] : host_dc) infra.hosts.push_back({host, dc});
    return infra;
}

}  // namespace schedlab::cloud
