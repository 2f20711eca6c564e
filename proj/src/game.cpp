#include "trustgame/game.hpp"

#include <cmath>
#include <stdexcept>

namespace trustgame {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void GameParams::validate() const {
  const double nonneg[] = {user_benefit,    developer_benefit, regulator_benefit,
                           compliance_cost, regulation_cost,   punishment_loss,
                           punishment_cost, detection_reward};
  for (double x : nonneg) {
    require(std::isfinite(x), "game parameter is not finite");
    require(x >= 0.0, "benefits and costs must be >= 0");
  }
  require(std::isfinite(risk_factor), "risk_factor is not finite");
  require(risk_factor <= 1.0, "risk_factor must be <= 1");
}

int ActionProfile::index() const {
  return (user == UserAction::NoTrust ? 4 : 0) +
         (developer == Compliance::Defect ? 2 : 0) +
         (regulator == Compliance::Defect ? 1 : 0);
}

ActionProfile ActionProfile::from_index(int i) {
  if (i < 0 || i > 7) throw std::out_of_range("profile index out of range");
  return ActionProfile{
      (i & 4) ? UserAction::NoTrust : UserAction::Trust,
      (i & 2) ? Compliance::Defect : Compliance::Comply,
      (i & 1) ? Compliance::Defect : Compliance::Comply,
  };
}

bool ActionProfile::cooperative(Role role) const {
  switch (role) {
    case Role::User: return user == UserAction::Trust;
    case Role::Developer: return developer == Compliance::Comply;
    case Role::Regulator: return regulator == Compliance::Comply;
  }
  throw std::logic_error("bad role");
}

double PayoffTriple::by_role(Role role) const {
  switch (role) {
    case Role::User: return user;
    case Role::Developer: return developer;
    case Role::Regulator: return regulator;
  }
  throw std::logic_error("bad role");
}

PayoffTriple payoff(const ActionProfile& a, const GameParams& p, TrustMode mode) {
  const bool complies = a.developer == Compliance::Comply;
  const bool enforces = a.regulator == Compliance::Comply;

  if (a.user == UserAction::NoTrust) {
    // No adoption: nobody earns benefits, cooperators still pay their costs.
    return PayoffTriple{0.0, complies ? -p.compliance_cost : 0.0,
                        enforces ? -p.regulation_cost : 0.0};
  }

  if (complies && enforces) {
    return PayoffTriple{p.user_benefit, p.developer_benefit - p.compliance_cost,
                        p.regulator_benefit - p.regulation_cost};
  }
  if (complies && !enforces) {
    // Conditional trust withholds adoption from a lenient regulator.
    if (mode == TrustMode::Conditional)
      return PayoffTriple{0.0, -p.compliance_cost, 0.0};
    return PayoffTriple{p.user_benefit, p.developer_benefit - p.compliance_cost,
                        p.regulator_benefit};
  }
  if (!complies && enforces) {
    return PayoffTriple{p.risk_factor * p.user_benefit,
                        p.developer_benefit - p.punishment_loss,
                        p.regulator_benefit - p.regulation_cost -
                            p.punishment_cost + p.detection_reward};
  }
  // Defecting developer, lenient regulator.
  if (mode == TrustMode::Conditional) return PayoffTriple{0.0, 0.0, 0.0};
  return PayoffTriple{p.risk_factor * p.user_benefit, p.developer_benefit,
                      p.regulator_benefit};
}

const std::array<ActionProfile, 8>& enumerate_profiles() {
  static const std::array<ActionProfile, 8> table = [] {
    std::array<ActionProfile, 8> out{};
    for (int i = 0; i < 8; ++i) out[i] = ActionProfile::from_index(i);
    return out;
  }();
  return table;
}

std::array<std::string, 8> profile_labels(TrustMode mode) {
  std::array<std::string, 8> out;
  for (int i = 0; i < 8; ++i)
    out[i] = profile_label(enumerate_profiles()[i], mode);
  return out;
}

ActionProfile flipped(const ActionProfile& profile, Role role) {
  ActionProfile out = profile;
  switch (role) {
    case Role::User:
      out.user = profile.user == UserAction::Trust ? UserAction::NoTrust
                                                   : UserAction::Trust;
      break;
    case Role::Developer:
      out.developer = profile.developer == Compliance::Comply
                          ? Compliance::Defect
                          : Compliance::Comply;
      break;
    case Role::Regulator:
      out.regulator = profile.regulator == Compliance::Comply
                          ? Compliance::Defect
                          : Compliance::Comply;
      break;
  }
  return out;
}

std::vector<ActionProfile> find_pure_nash(const GameParams& params,
                                          TrustMode mode, bool strict) {
  params.validate();
  std::vector<ActionProfile> out;
  for (const ActionProfile& profile : enumerate_profiles()) {
    const PayoffTriple here = payoff(profile, params, mode);
    bool stable = true;
    for (Role role : kRoles) {
      const double gain =
          payoff(flipped(profile, role), params, mode).by_role(role) -
          here.by_role(role);
      if (strict ? gain >= 0.0 : gain > 0.0) {
        stable = false;
        break;
      }
    }
    if (stable) out.push_back(profile);
  }
  return out;
}

std::string user_action_label(UserAction action, TrustMode mode) {
  if (action == UserAction::NoTrust) return "N";
  return mode == TrustMode::Conditional ? "CT" : "T";
}

std::string compliance_label(Compliance action) {
  return action == Compliance::Comply ? "C" : "D";
}

std::string profile_label(const ActionProfile& profile, TrustMode mode) {
  return user_action_label(profile.user, mode) +
         compliance_label(profile.developer) + compliance_label(profile.regulator);
}

std::string action_label(Role role, bool cooperative, TrustMode mode) {
  if (role == Role::User)
    return user_action_label(
        cooperative ? UserAction::Trust : UserAction::NoTrust, mode);
  return compliance_label(cooperative ? Compliance::Comply : Compliance::Defect);
}

const char* role_name(Role role) {
  switch (role) {
    case Role::User: return "user";
    case Role::Developer: return "developer";
    case Role::Regulator: return "regulator";
  }
  throw std::logic_error("bad role");
}

const char* mode_name(TrustMode mode) {
  return mode == TrustMode::Conditional ? "conditional" : "unconditional";
}

Role role_from_string(const std::string& name) {
  if (name == "user") return Role::User;
  if (name == "developer") return Role::Developer;
  if (name == "regulator") return Role::Regulator;
  throw std::invalid_argument("unknown role: " + name);
}

TrustMode mode_from_string(const std::string& name) {
  if (name == "conditional") return TrustMode::Conditional;
  if (name == "unconditional") return TrustMode::Unconditional;
  throw std::invalid_argument("unknown trust mode: " + name);
}

}  // namespace trustgame
