#include "chmsav/fft.hpp"

namespace chmsav::detail {

namespace {
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace

FftPlan::FftPlan(int n) : n_(n) {
  real_ = fftw_alloc_real(static_cast<std::size_t>(n));
  spec_ = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  std::lock_guard<std::mutex> lock(planner_mutex());
  fwd_ = fftw_plan_dft_r2c_1d(n, real_, spec_, FFTW_ESTIMATE);
  inv_ = fftw_plan_dft_c2r_1d(n, spec_, real_, FFTW_ESTIMATE);
}

FftPlan::~FftPlan() {
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
  }
  fftw_free(real_);
  fftw_free(spec_);
}

void FftPlan::forward() { fftw_execute(fwd_); }

void FftPlan::inverse_scaled() {
  fftw_execute(inv_);
  const double scale = 1.0 / n_;
  for (int j = 0; j < n_; ++j) real_[j] *= scale;
}

FftWorkspacePool::FftWorkspacePool(int n) : n_(n) {
  // Pay the planning cost up front, not inside the first time step.
  idle_.push_back(std::make_unique<FftPlan>(n));
}

FftWorkspacePool::Lease FftWorkspacePool::acquire() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!idle_.empty()) {
      auto plan = std::move(idle_.back());
      idle_.pop_back();
      return Lease(this, std::move(plan));
    }
  }
  return Lease(this, std::make_unique<FftPlan>(n_));
}

void FftWorkspacePool::release(std::unique_ptr<FftPlan> plan) {
  std::lock_guard<std::mutex> lock(mu_);
  idle_.push_back(std::move(plan));
}

FftWorkspacePool::Lease::Lease(Lease&& other) noexcept
    : pool_(other.pool_), plan_(std::move(other.plan_)) {
  other.pool_ = nullptr;
}

FftWorkspacePool::Lease::~Lease() {
  if (pool_ && plan_) pool_->release(std::move(plan_));
}

}  // namespace chmsav::detail
