#pragma once

#include <fftw3.h>

#include <complex>
#include <memory>
#include <mutex>
#include <vector>

namespace chmsav::detail {

/// One r2c/c2r transform pair of fixed size with its own FFTW buffers.
/// FFTW's planner is not thread-safe, so plan construction and destruction
/// are serialized internally; executing distinct plans concurrently is fine.
class FftPlan {
 public:
  explicit FftPlan(int n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  int size() const { return n_; }
  int spec_size() const { return n_ / 2 + 1; }

  double* real_buf() { return real_; }
  std::complex<double>* spec_buf() {
    return reinterpret_cast<std::complex<double>*>(spec_);
  }

  /// real_buf -> spec_buf (unnormalized half spectrum, modes 0..N/2).
  void forward();

  /// spec_buf -> real_buf, scaled by 1/N. Clobbers spec_buf (FFTW c2r).
  void inverse_scaled();

 private:
  int n_;
  double* real_;
  fftw_complex* spec_;
  fftw_plan fwd_;
  fftw_plan inv_;
};

/// Hands out FftPlan instances for one transform size so that concurrent
/// callers never share buffers. Returned plans are recycled, which keeps the
/// steady-state cost at zero plan constructions per step.
class FftWorkspacePool {
 public:
  explicit FftWorkspacePool(int n);

  class Lease {
   public:
    Lease(Lease&& other) noexcept;
    Lease& operator=(Lease&&) = delete;
    Lease(const Lease&) = delete;
    ~Lease();
    FftPlan& operator*() const { return *plan_; }
    FftPlan* operator->() const { return plan_.get(); }

   private:
    friend class FftWorkspacePool;
    Lease(FftWorkspacePool* pool, std::unique_ptr<FftPlan> plan)
        : pool_(pool), plan_(std::move(plan)) {}
    FftWorkspacePool* pool_;
    std::unique_ptr<FftPlan> plan_;
  };

  Lease acquire();

 private:
  void release(std::unique_ptr<FftPlan> plan);

  int n_;
  std::mutex mu_;
  std::vector<std::unique_ptr<FftPlan>> idle_;
};

}  // namespace chmsav::detail
