#pragma once

namespace mimlab
{
    /// Selects the serial reference kernel or its OpenMP counterpart. Both
    /// produce identical results; the serial one is kept for testing and
    /// benchmarking.
    enum class Execution
    {
        serial,
        parallel
    };
}
