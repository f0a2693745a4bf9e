#pragma once

// Registry of finite verification tasks, one per claim. Each task runs at a
// quick scale by default and at the full acceptance scale with desk_scale.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace dyckolab {

enum class TaskStatus { pass, fail, unstable };

std::string status_name(TaskStatus s);

struct TaskResult {
    std::string id;
    TaskStatus status = TaskStatus::fail;
    nlohmann::json parameters;
    nlohmann::json result;
    double seconds = 0;

    nlohmann::json to_json() const;
};

struct TaskInfo {
    std::string id;
    std::string claim;
};

/// All tasks, in the order `verify all` runs and reports them.
const std::vector<TaskInfo>& verification_tasks();

bool has_task(const std::string& id);

/// DomainError for an unknown id. Cap overruns are reported as unstable.
TaskResult run_task(const std::string& id, bool desk_scale);

/// Runs the tasks on up to `threads` workers; results follow the order of ids.
std::vector<TaskResult> run_tasks(const std::vector<std::string>& ids, bool desk_scale, unsigned threads = 1);

} // namespace dyckolab
