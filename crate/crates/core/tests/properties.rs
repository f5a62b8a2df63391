mod common;

use proptest::prelude::*;

use pgmin::game::pgsolver::{parse_pgsolver, write_pgsolver, Convention};
use pgmin::game::{cmp_proximity, convert_priorities, distance, play_from, ConvertDirection, Proximity};
use pgmin::generators::{gen_random, gen_stretched};
use pgmin::reduction::{
    check_stable, oracle_strong_pairs, oracle_stuttering_pairs, reduce, refine_strong, refine_stuttering, Equivalence,
};
use pgmin::solvers::{solve_spm, solve_zielonka};
use pgmin::strategy::{lift_solution, verify_strategy};
use pgmin::{Game, Player};

fn game(max_n: usize, max_d: usize, max_p: u32) -> impl Strategy<Value = Game> {
    (1..=max_n, 1..=max_d, 0..=max_p, any::<u64>()).prop_map(|(n, d, p, seed)| gen_random(n, d, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn write_then_parse_is_identity(g in game(40, 4, 9)) {
        let text = write_pgsolver(&g, Convention::Min);
        prop_assert_eq!(parse_pgsolver(text.as_bytes(), Convention::Min).unwrap(), g);
    }

    #[test]
    fn max_text_is_stable(g in game(40, 4, 9)) {
        let text = write_pgsolver(&g, Convention::Max);
        let back = parse_pgsolver(text.as_bytes(), Convention::Max).unwrap();
        prop_assert_eq!(write_pgsolver(&back, Convention::Max), text);
        prop_assert_eq!(solve_zielonka(&back).winners().to_vec(), solve_zielonka(&g).winners().to_vec());
    }

    #[test]
    fn conversion_is_an_involution_from_low_priorities(g in game(30, 3, 9)) {
        let min = g.priorities().iter().copied().min().unwrap();
        let there = convert_priorities(&g, ConvertDirection::MinToMax);
        let back = convert_priorities(&there, ConvertDirection::MaxToMin);
        if min <= 1 {
            prop_assert_eq!(back.priorities(), g.priorities());
        }
        for v in g.vertices() {
            prop_assert_eq!(back.priority(v) % 2, g.priority(v) % 2);
        }
    }

    #[test]
    fn distance_triangle_inequality(g in game(25, 3, 3), a in 0usize..25, b in 0usize..25, c in 0usize..25) {
        let n = g.vertex_count();
        let (a, b, c) = (a % n, b % n, c % n);
        if let (Some(ab), Some(bc)) = (distance(&g, a, b), distance(&g, b, c)) {
            prop_assert!(distance(&g, a, c).unwrap() <= ab + bc);
        }
    }

    #[test]
    fn proximity_is_a_strict_total_order(g in game(15, 3, 3), u in 0usize..15) {
        let n = g.vertex_count();
        let u = u % n;
        for a in 0..n {
            prop_assert!(cmp_proximity(&g, u, a, a).is_err());
            for b in 0..n {
                if a == b { continue; }
                let ab = cmp_proximity(&g, u, a, b).unwrap();
                let ba = cmp_proximity(&g, u, b, a).unwrap();
                prop_assert_ne!(ab, ba);
                for c in 0..n {
                    if c == a || c == b { continue; }
                    if ab == Proximity::Less && cmp_proximity(&g, u, b, c).unwrap() == Proximity::Less {
                        prop_assert_eq!(cmp_proximity(&g, u, a, c).unwrap(), Proximity::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn plays_close_within_vertex_count(g in game(40, 4, 6), start in 0usize..40) {
        let s = solve_zielonka(&g);
        let start = start % g.vertex_count();
        // complete both strategies with arbitrary moves outside their regions
        let mut even = s.strategy(Player::Even).clone();
        let mut odd = s.strategy(Player::Odd).clone();
        for v in g.vertices() {
            let strat = if g.owner(v) == Player::Even { &mut even } else { &mut odd };
            if !strat.is_defined(v) {
                strat.set(v, g.successors(v)[0]);
            }
        }
        let (play, winner) = play_from(&g, &even, &odd, start).unwrap();
        prop_assert!(play.prefix.len() + play.cycle.len() <= g.vertex_count());
        prop_assert_eq!(winner, play.winner(&g));
    }

    #[test]
    fn strong_refines_stuttering(g in game(50, 4, 5)) {
        let strong = refine_strong(&g);
        let stut = refine_stuttering(&g);
        prop_assert!(strong.refines(&stut));
        prop_assert!(check_stable(&g, &strong, Equivalence::Strong).is_ok());
        prop_assert!(check_stable(&g, &stut, Equivalence::Stuttering).is_ok());
    }

    #[test]
    fn refinement_matches_relational_oracles(g in game(9, 3, 3)) {
        prop_assert!(refine_strong(&g).same_classes(&oracle_strong_pairs(&g).to_partition()));
        prop_assert!(refine_stuttering(&g).same_classes(&oracle_stuttering_pairs(&g).to_partition()));
    }

    #[test]
    fn oracle_relations_are_equivalences(g in game(9, 3, 3)) {
        for rel in [oracle_strong_pairs(&g), oracle_stuttering_pairs(&g)] {
            prop_assert!(rel.is_reflexive() && rel.is_symmetric() && rel.is_transitive());
        }
    }

    #[test]
    fn quotients_preserve_winners(g in game(50, 4, 6)) {
        let direct = solve_zielonka(&g);
        for eq in [Equivalence::Strong, Equivalence::Stuttering] {
            let r = reduce(&g, eq);
            let q = solve_spm(&r.quotient);
            for v in g.vertices() {
                prop_assert_eq!(direct.winner(v), q.winner(r.map[v]));
            }
        }
    }

    #[test]
    fn reduction_only_shrinks(g in game(50, 4, 6)) {
        for eq in [Equivalence::Strong, Equivalence::Stuttering] {
            let r = reduce(&g, eq);
            prop_assert!(r.quotient.vertex_count() <= g.vertex_count());
            prop_assert!(r.quotient.edge_count() <= g.edge_count());
            // reducing the quotient again changes nothing
            let again = reduce(&r.quotient, eq);
            prop_assert_eq!(again.quotient.vertex_count(), r.quotient.vertex_count());
        }
    }

    #[test]
    fn stretching_is_invisible_to_stuttering(g in game(15, 3, 4), k in 1usize..5) {
        let s = gen_stretched(&g, k).unwrap();
        let a = reduce(&g, Equivalence::Stuttering);
        let b = reduce(&s, Equivalence::Stuttering);
        prop_assert_eq!(a.quotient.vertex_count(), b.quotient.vertex_count());
        prop_assert_eq!(a.quotient.edge_count(), b.quotient.edge_count());
    }

    #[test]
    fn lifted_strategies_win(g in game(50, 4, 6)) {
        let r = reduce(&g, Equivalence::Stuttering);
        let lifted = lift_solution(&g, &r, &solve_zielonka(&r.quotient)).unwrap();
        prop_assert_eq!(lifted.winners().to_vec(), solve_zielonka(&g).winners().to_vec());
        prop_assert!(lifted.check(&g).is_ok());
        for player in [Player::Even, Player::Odd] {
            prop_assert!(verify_strategy(&g, player, &lifted.region(player), lifted.strategy(player)).is_ok());
        }
    }
}
