#include "acrox/rate_limit.hpp"

#include <algorithm>
#include <stdexcept>

namespace acrox {

SlidingWindowLimiter::SlidingWindowLimiter(std::size_t limit, Duration window)
    : limit_(limit), window_(window) {
  if (limit_ == 0) throw std::invalid_argument("rate limit must be at least 1");
  if (window_ <= Duration::zero()) throw std::invalid_argument("rate window must be positive");
}

SlidingWindowLimiter::Decision SlidingWindowLimiter::try_acquire(Instant now) {
  now = std::max(now, latest_);
  latest_ = now;
  while (!granted_.empty() && now - granted_.front() >= window_) granted_.pop_front();
  if (granted_.size() < limit_) {
    granted_.push_back(now);
    return {true, Duration::zero()};
  }
  return {false, granted_.front() + window_ - now};
}

RateGate::RateGate(std::size_t requests_per_minute, Clock& clock)
    : limiter_(requests_per_minute), clock_(clock) {}

Instant RateGate::acquire() {
  while (true) {
    Instant wake;
    {
      std::lock_guard lock(mu_);
      const Instant now = clock_.now();
      const auto d = limiter_.try_acquire(now);
      if (d.granted) return now;
      wake = now + d.wait;
    }
    clock_.sleep_until(wake);
  }
}

}  // namespace acrox
