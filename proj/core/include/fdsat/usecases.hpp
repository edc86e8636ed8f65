#pragma once

#include <string>
#include <vector>

namespace fdsat::usecases {

enum class UseCaseId { UL, FL, CTRL, FU_UD, UU_FD, ISL_SO, ISL_ML, SATL };

enum class PriorityTier { MostPromising, Promising, LessPromising };

// Role names of the default in-band full-duplex topology for a use case.
struct FdTopology {
    std::string a_tx;
    std::string a_rx;
    std::string b_tx;
    std::string b_rx;
    std::string fd_node;
    double default_carrier_ghz = 0.0;
};

struct UseCase {
    UseCaseId id;
    std::string name;
    std::string application;
    std::vector<std::string> bands;
    std::vector<std::string> advantages;
    PriorityTier priority_tier;
    FdTopology fd_topology;
};

// All eight entries, in catalog order.
const std::vector<UseCase>& catalog();

const UseCase& lookup(UseCaseId id);

PriorityTier priority(UseCaseId id);

std::string to_string(UseCaseId id);
std::string to_string(PriorityTier tier);

// Throws ValidationError listing the valid ids.
UseCaseId parse_use_case_id(const std::string& text);

}  // namespace fdsat::usecases
