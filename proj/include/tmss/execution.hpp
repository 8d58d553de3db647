/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

namespace tmss {

// Serial paths are the reference implementations; parallel paths must
// reproduce them bit for bit.
enum class Execution { Serial, Parallel };

}  // namespace tmss
