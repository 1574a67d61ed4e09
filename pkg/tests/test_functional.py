import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))


def run_end_to_end():
    """Run the drawing pipelines end to end and report each step"""
    print("=" * 50)
    print("END-TO-END FUNCTIONAL TESTING")
    print("=" * 50)

    from constructions.generators import complete, icosahedron, octahedron
    from decompositions.path_copath import find_path_copath
    from decompositions.two_outerpath import find_two_outerpath
    from drawings.model import biplanar_to_split2
    from drawings.outerpath_drawings import draw_kleetope_split2, draw_path_copath_split2, draw_two_outerpath_biplanar
    from verification.deciders import Answer, decide_biplanar
    from verification.excess import excess_report
    from verification.neighborhoods import octahedron_triangle_partitions
    from verification.validate import validate_drawing

    all_passed = True

    # Test 1: Icosahedron pipeline
    print("\n1. Testing Icosahedron → Biplanar Drawing...")
    try:
        E = icosahedron()
        result = find_two_outerpath(E)
        drawing = draw_two_outerpath_biplanar(E, result)
        report = excess_report(drawing)
        print(f"  ✓ Two-outerpath found after {result.nodes} nodes")
        print(f"  ✓ Edges drawn: {drawing.num_edges}")
        print(f"  ✓ Total excess: {report.total_excess}")
        if not validate_drawing(drawing).valid or drawing.num_edges != 120 or report.total_excess != 12:
            print("  ✗ Biplanar drawing does not match the expected counts")
            all_passed = False

        merged = biplanar_to_split2(drawing)
        print(f"  ✓ Merged into {merged.kind} with {len(merged.planes)} plane")
    except Exception as e:
        print(f"  ✗ Icosahedron pipeline failed: {e}")
        all_passed = False

    # Test 2: Kleetope pipeline
    print("\n2. Testing Kleetope → Split-2 Drawing...")
    try:
        E = icosahedron()
        drawing = draw_kleetope_split2(E, find_two_outerpath(E))
        excess = excess_report(drawing).total_excess
        print(f"  ✓ Target: {drawing.target.number_of_nodes()} vertices, {drawing.num_edges} edges")
        print(f"  ✓ Total excess: {excess}")
        if not validate_drawing(drawing).valid or excess != 18:
            print("  ✗ Kleetope drawing does not match the expected excess")
            all_passed = False
    except Exception as e:
        print(f"  ✗ Kleetope pipeline failed: {e}")
        all_passed = False

    # Test 3: Path-copath pipeline
    print("\n3. Testing Octahedron → Path-Copath Drawing...")
    try:
        E = octahedron()
        drawing = draw_path_copath_split2(E, find_path_copath(E))
        print(f"  ✓ Edges drawn: {drawing.num_edges}")
        print(f"  ✓ Appearances: {drawing.metadata['appearances']}")
        if not validate_drawing(drawing).valid:
            print("  ✗ Path-copath drawing is invalid")
            all_passed = False
    except Exception as e:
        print(f"  ✗ Path-copath pipeline failed: {e}")
        all_passed = False

    # Test 4: Checks
    print("\n4. Testing Exhaustive Checks...")
    try:
        partitions = octahedron_triangle_partitions()
        print(f"  ✓ Octahedron partitions: {len(partitions.partitions)} of {partitions.candidates_checked}")
        decision = decide_biplanar(complete(6))
        print(f"  ✓ K6 biplanar: {decision.answer.value}")
        if decision.answer is not Answer.YES:
            all_passed = False
    except Exception as e:
        print(f"  ✗ Checks failed: {e}")
        all_passed = False

    print("\n" + "=" * 50)
    if all_passed:
        print("END-TO-END TESTS: ALL PASSED ✓")
    else:
        print("END-TO-END TESTS: SOME FAILED ✗")
    print("=" * 50)

    return all_passed


def test_end_to_end():
    """Test complete system workflow"""
    assert run_end_to_end()


if __name__ == "__main__":
    run_end_to_end()
