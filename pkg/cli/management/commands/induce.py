from cli.services.base import PresentationCommand
from induce.services.characters import parse_character
from induce.services.induction import InductionSide, induce


class Command(PresentationCommand):
    help = 'Induce a representation from a character of a generator subalgebra'

    def add_command_arguments(self, parser):
        parser.add_argument('--char', required=True, help='Character values, e.g. "Pm=2, Pp=1/3"')
        parser.add_argument(
            '--side',
            default=InductionSide.LEFT.value,
            choices=[side.value for side in InductionSide],
            help='Coregular action the equivariance condition uses',
        )

    def run(self, triplet, config, **options):
        character = parse_character(options['char'], triplet.algebra)
        rep = induce(triplet, character, options['side'])
        if config.is_json:
            self.stdout.write(rep.to_json())
            return

        data = rep.to_dict()
        self.stdout.write(f'{rep.character} ({data["side"]} side), dimension {len(rep.carrier)}')
        for index, element in enumerate(data['carrier']):
            self.stdout.write(f'  e{index} = {element}')
        for name, matrix in data['generators'].items():
            self.stdout.write(f'{name}:')
            for row in matrix['entries']:
                self.stdout.write('  [' + ', '.join(row) + ']')
            if matrix['boundary_columns']:
                columns = ', '.join(str(j) for j in matrix['boundary_columns'])
                self.stdout.write(self.style.WARNING(f'  columns {columns} reach above D={config.degree}'))
