/*
   Copyright 2026, The barrier-delay authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BARRIER_DELAY_ERRORS_HPP
#define BARRIER_DELAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace barrier_delay
{

/// Energy or geometry outside the over-barrier domain (E <= V0, E <= V1, ...).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Invalid BarrierConfig (V0 not above both sides, a < 0, mu <= 0, ...).
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A quantity that is mathematically undefined for the given input, e.g. the
/// resonance half-width of a symmetric barrier.
class UndefinedError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Phase jump between neighbouring stencil points too large to unwrap.
class PhaseWrapError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A consecutive phase jump of ~pi, for which the branch cannot be decided.
class WrapAmbiguityError : public std::runtime_error
{
  public:
    WrapAmbiguityError(const std::string& what, std::size_t index)
        : std::runtime_error(what), index_(index)
    {
    }

    /// Index of the later sample of the ambiguous pair.
    std::size_t index() const noexcept { return index_; }

  private:
    std::size_t index_;
};

/// Packet parameters that cannot describe a valid over-barrier packet.
class ConstructionError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// |psi|^2 has no interior maximum on the time window.
class NoPeakError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace barrier_delay

#endif
