from django.core.management.base import CommandError

from cli.services.base import USAGE_ERROR, PresentationCommand
from freealg.services.algebra import normal_order


class Command(PresentationCommand):
    help = 'PBW normal form of a word of generators, e.g. "Pp K Pm"'

    def add_command_arguments(self, parser):
        parser.add_argument('word', nargs='+', help='Generators, in order; "*" separators are allowed')

    def run(self, triplet, config, **options):
        word = [name for piece in options['word'] for name in piece.replace('*', ' ').split()]
        homes = [a for a in (triplet.algebra, triplet.dual) if all(a.has_generator(n) for n in word)]
        if not homes:
            raise CommandError(
                f'{" ".join(word)} is not a word in {triplet.algebra.name} or {triplet.dual.name}',
                returncode=USAGE_ERROR,
            )
        self.stdout.write(normal_order(word, homes[0]).render())
