#include <algorithm>
#include <cmath>
#include <string>

#include "sensornoise/calibration.hpp"
#include "sensornoise/errors.hpp"

namespace sensornoise {

JointParamModel fit_joint_model(const std::map<int, IsoParams>& per_iso) {
  if (per_iso.size() < 3) {
    throw InsufficientDataError("joint model needs >= 3 ISO settings, got " +
                                std::to_string(per_iso.size()));
  }
  std::vector<double> log_k, log_tl, log_r;
  JointParamModel model;
  for (const auto& [iso, p] : per_iso) {
    if (!(p.k > 0.0) || !(p.sigma_tl > 0.0) || !(p.sigma_r > 0.0)) {
      throw CalibrationError("ISO " + std::to_string(iso) +
                             ": K, sigma_tl and sigma_r must be > 0 for a log-space fit");
    }
    log_k.push_back(std::log2(p.k));
    log_tl.push_back(std::log2(p.sigma_tl));
    log_r.push_back(std::log2(p.sigma_r));
    model.lambda_pool.push_back(p.lambda);
  }
  model.log_k_min = *std::min_element(log_k.begin(), log_k.end());
  model.log_k_max = *std::max_element(log_k.begin(), log_k.end());
  model.tl_line = fit_line(log_k, log_tl);
  model.row_line = fit_line(log_k, log_r);
  model.validate();
  return model;
}

CameraProfile make_profile(std::string camera_id, std::map<int, IsoParams> per_iso) {
  CameraProfile profile;
  profile.camera_id = std::move(camera_id);
  profile.joint = fit_joint_model(per_iso);
  profile.per_iso = std::move(per_iso);
  return profile;
}

}  // namespace sensornoise
