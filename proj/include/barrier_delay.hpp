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

#ifndef BARRIER_DELAY_HPP
#define BARRIER_DELAY_HPP

#include <barrier_delay/amplitudes.hpp>
#include <barrier_delay/barrier.hpp>
#include <barrier_delay/delays.hpp>
#include <barrier_delay/errors.hpp>
#include <barrier_delay/io.hpp>
#include <barrier_delay/phase.hpp>
#include <barrier_delay/presets.hpp>
#include <barrier_delay/scan.hpp>
#include <barrier_delay/wavepacket.hpp>

#endif
