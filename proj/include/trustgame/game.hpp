#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace trustgame {

// Three-actor AI governance trust game: a user decides whether to adopt an
// AI system, a developer decides whether to comply with regulation, and a
// regulator decides whether to enforce it. Two payoff models exist, selected
// by TrustMode: under Conditional trust the user's trust takes effect only
// while the regulator's public reputation is good (rows with a lenient
// regulator collapse to zero payoffs for user and regulator).

enum class TrustMode { Conditional, Unconditional };
enum class Role { User, Developer, Regulator };
enum class UserAction { Trust, NoTrust };
enum class Compliance { Comply, Defect };

inline constexpr std::array<Role, 3> kRoles{Role::User, Role::Developer,
                                            Role::Regulator};

// All payoff symbols of the two governance tables plus the risk factor.
struct GameParams {
  double user_benefit = 4.0;       // b_U
  double developer_benefit = 4.0;  // b_P
  double regulator_benefit = 4.0;  // b_R
  double compliance_cost = 0.5;    // c_P
  double regulation_cost = 0.5;    // c_R
  double punishment_loss = 1.5;    // u, institutional punishment on the developer
  double punishment_cost = 0.5;    // v, cost of administering the punishment
  double detection_reward = 2.0;   // b_fo, reward for catching a defecting developer
  double risk_factor = -0.1;       // epsilon in (-inf, 1], multiplies b_U on unsafe adoption

  // Throws std::invalid_argument on non-finite values, negative benefits or
  // costs, or risk_factor > 1.
  void validate() const;

  bool operator==(const GameParams&) const = default;
};

// One joint action. 8 profiles exist; index() follows the payoff-table order
// (trust rows first, then developer, then regulator, cooperative first).
struct ActionProfile {
  UserAction user = UserAction::Trust;
  Compliance developer = Compliance::Comply;
  Compliance regulator = Compliance::Comply;

  int index() const;
  static ActionProfile from_index(int i);
  bool cooperative(Role role) const;

  bool operator==(const ActionProfile&) const = default;
};

struct PayoffTriple {
  double user = 0.0;
  double developer = 0.0;
  double regulator = 0.0;

  double by_role(Role role) const;
  bool operator==(const PayoffTriple&) const = default;
};

// Exact payoff row for one profile. Total over all 8 profiles in both modes.
PayoffTriple payoff(const ActionProfile& profile, const GameParams& params,
                    TrustMode mode);

// All 8 profiles in table order: TCC, TCD, TDC, TDD, NCC, NCD, NDC, NDD
// (the trust rows read CTxx in Conditional mode). Stable across runs.
const std::array<ActionProfile, 8>& enumerate_profiles();

// Labels of the 8 profiles in table order for the given mode.
std::array<std::string, 8> profile_labels(TrustMode mode);

// The profile with the given role's action flipped, co-players unchanged.
ActionProfile flipped(const ActionProfile& profile, Role role);

// Pure-strategy Nash profiles by brute-force unilateral-deviation check.
// strict=false (weak): a profile survives payoff ties; strict=true: any
// deviation with equal payoff disqualifies. Result in table order.
std::vector<ActionProfile> find_pure_nash(const GameParams& params,
                                          TrustMode mode, bool strict = false);

// Labels. The user's trust action renders "CT" in Conditional mode and "T"
// in Unconditional mode; NoTrust is "N" in both.
std::string user_action_label(UserAction action, TrustMode mode);
std::string compliance_label(Compliance action);
std::string profile_label(const ActionProfile& profile, TrustMode mode);
std::string action_label(Role role, bool cooperative, TrustMode mode);

const char* role_name(Role role);
const char* mode_name(TrustMode mode);
Role role_from_string(const std::string& name);
TrustMode mode_from_string(const std::string& name);

}  // namespace trustgame
